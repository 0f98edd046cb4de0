use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gen::{Ctx, Gen};
use super::ring::Ring;
use super::scalar::{fmt_frac, qi, Scalar};
use crate::error::{Error, Result};

/// A commutative monomial: sorted generators with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Gen, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(g: Gen) -> Monomial {
        Monomial(vec![(g, 1)])
    }

    pub fn from_factors<I: IntoIterator<Item = Gen>>(gens: I) -> Monomial {
        let mut v: Vec<Gen> = gens.into_iter().collect();
        v.sort();
        let mut out: Vec<(Gen, u32)> = Vec::new();
        for g in v {
            match out.last_mut() {
                Some((h, e)) if *h == g => *e += 1,
                _ => out.push((g, 1)),
            }
        }
        Monomial(out)
    }

    pub fn factors(&self) -> &[(Gen, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, g: &Gen) -> u32 {
        self.0.iter().find(|(h, _)| h == g).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Removes one power of `g`; None if `g` does not divide.
    pub fn divide_var(&self, g: &Gen) -> Option<(u32, Monomial)> {
        let pos = self.0.iter().position(|(h, _)| h == g)?;
        let mut out = self.0.clone();
        let e = out[pos].1;
        if e == 1 {
            out.remove(pos);
        } else {
            out[pos].1 -= 1;
        }
        Some((e, Monomial(out)))
    }

    /// Drops every power of `g`, returning the exponent removed.
    pub fn strip(&self, g: &Gen) -> (u32, Monomial) {
        let e = self.exponent(g);
        (e, Monomial(self.0.iter().filter(|(h, _)| h != g).copied().collect()))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse commutative polynomial with rational coefficients, no zero terms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyW {
    terms: BTreeMap<Monomial, Scalar>,
}

impl PolyW {
    pub fn zero() -> PolyW {
        PolyW { terms: BTreeMap::new() }
    }

    pub fn one() -> PolyW {
        PolyW::constant(qi(1))
    }

    pub fn constant(c: Scalar) -> PolyW {
        let mut p = PolyW::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(g: Gen) -> PolyW {
        PolyW::term(Monomial::var(g), qi(1))
    }

    pub fn term(m: Monomial, c: Scalar) -> PolyW {
        let mut p = PolyW::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// self += c * other
    pub fn add_scaled(&mut self, other: &PolyW, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn scale(&self, c: &Scalar) -> PolyW {
        if c.is_zero() {
            return PolyW::zero();
        }
        PolyW { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_poly(&self, other: &PolyW) -> PolyW {
        let mut out = PolyW::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> PolyW {
        let mut acc = PolyW::one();
        for _ in 0..k {
            acc = acc.mul_poly(self);
        }
        acc
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Homogeneous component of total degree `d`.
    pub fn degree_part(&self, d: u32) -> PolyW {
        self.filter(|m| m.degree() == d)
    }

    pub fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> PolyW {
        PolyW { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    pub fn vars(&self) -> BTreeSet<Gen> {
        self.terms.keys().flat_map(|m| m.factors().iter().map(|(g, _)| *g)).collect()
    }

    pub fn derivative(&self, g: &Gen) -> PolyW {
        let mut out = PolyW::zero();
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.divide_var(g) {
                out.add_term(rest, c * qi(e as i64));
            }
        }
        out
    }

    /// Coefficient of `g^k` viewing the polynomial as a polynomial in `g`.
    pub fn coeff_of_power(&self, g: &Gen, k: u32) -> PolyW {
        let mut out = PolyW::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.strip(g);
            if e == k {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    pub fn max_power(&self, g: &Gen) -> u32 {
        self.terms.keys().map(|m| m.exponent(g)).max().unwrap_or(0)
    }

    /// Replaces each variable for which `sub` returns Some.
    pub fn substitute<F: Fn(&Gen) -> Option<PolyW>>(&self, sub: F) -> PolyW {
        let mut cache: BTreeMap<(Gen, u32), PolyW> = BTreeMap::new();
        let mut out = PolyW::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = PolyW::constant(c.clone());
            for &(g, e) in m.factors() {
                match sub(&g) {
                    None => kept.extend(std::iter::repeat_n(g, e as usize)),
                    Some(val) => {
                        let pw = cache.entry((g, e)).or_insert_with(|| val.pow(e)).clone();
                        acc = acc.mul_poly(&pw);
                        if acc.is_zero() {
                            break;
                        }
                    }
                }
            }
            if acc.is_zero() {
                continue;
            }
            let km = Monomial::from_factors(kept);
            for (am, ac) in acc.terms {
                out.add_term(am.mul(&km), ac);
            }
        }
        out
    }

    /// Evaluates at a point; None if a variable has no value.
    pub fn eval<F: Fn(&Gen) -> Option<Scalar>>(&self, val: F) -> Option<Scalar> {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (g, e) in m.factors() {
                let x = val(g)?;
                for _ in 0..*e {
                    t *= &x;
                }
            }
            total += t;
        }
        Some(total)
    }

    /// Fails with a context mismatch if any variable is foreign to `ctx`.
    pub fn check_context(&self, ctx: &Ctx) -> Result<()> {
        match self.vars().into_iter().find(|g| !ctx.admits(g)) {
            Some(g) => Err(Error::ContextMismatch(format!("{g} is not a generator for N={}, p={}", ctx.n, ctx.p))),
            None => Ok(()),
        }
    }

    pub fn poly_add(ctx: &Ctx, x: &PolyW, y: &PolyW) -> Result<PolyW> {
        x.check_context(ctx)?;
        y.check_context(ctx)?;
        Ok(x + y)
    }

    pub fn poly_mul(ctx: &Ctx, x: &PolyW, y: &PolyW) -> Result<PolyW> {
        x.check_context(ctx)?;
        y.check_context(ctx)?;
        Ok(x * y)
    }
}

impl fmt::Display for PolyW {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_frac(c))?;
            } else {
                write!(f, "{}*{}", fmt_frac(c), m)?;
            }
        }
        Ok(())
    }
}

impl Add for &PolyW {
    type Output = PolyW;
    fn add(self, rhs: &PolyW) -> PolyW {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PolyW {
    type Output = PolyW;
    fn sub(self, rhs: &PolyW) -> PolyW {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &PolyW {
    type Output = PolyW;
    fn mul(self, rhs: &PolyW) -> PolyW {
        self.mul_poly(rhs)
    }
}

impl Neg for &PolyW {
    type Output = PolyW;
    fn neg(self) -> PolyW {
        PolyW { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for PolyW {
    type Output = PolyW;
    fn add(self, rhs: PolyW) -> PolyW {
        &self + &rhs
    }
}

impl Sub for PolyW {
    type Output = PolyW;
    fn sub(self, rhs: PolyW) -> PolyW {
        &self - &rhs
    }
}

impl Mul for PolyW {
    type Output = PolyW;
    fn mul(self, rhs: PolyW) -> PolyW {
        self.mul_poly(&rhs)
    }
}

impl Neg for PolyW {
    type Output = PolyW;
    fn neg(self) -> PolyW {
        -&self
    }
}

impl Ring for PolyW {
    fn zero_elem() -> Self {
        PolyW::zero()
    }
    fn one_elem() -> Self {
        PolyW::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_poly(other)
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_scalar(s: &Scalar) -> Self {
        PolyW::constant(s.clone())
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
    fn scale(&self, s: &Scalar) -> Self {
        PolyW::scale(self, s)
    }
}

impl One for PolyW {
    fn one() -> Self {
        PolyW::one()
    }
}

impl Zero for PolyW {
    fn zero() -> Self {
        PolyW::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::q;

    fn w(a: usize, b: usize, j: usize) -> PolyW {
        PolyW::var(Gen::w(a, b, j))
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let x = w(1, 1, 0);
        let y = w(1, 2, 1);
        let s = &x + &y;
        let d = &x - &y;
        let prod = &s * &d;
        let expect = &(&x * &x) - &(&y * &y);
        assert_eq!(prod, expect);
        assert!((&s - &s).is_zero());
        assert_eq!(x.pow(3).degree(), Some(3));
    }

    #[test]
    fn derivative_and_substitution() {
        let x = w(1, 1, 0);
        let y = w(2, 2, 0);
        let p = &x.pow(2).scale(&q(3, 2)) * &y;
        assert_eq!(p.derivative(&Gen::w(1, 1, 0)), (&x * &y).scale(&qi(3)));
        let sub = p.substitute(|g| (*g == Gen::w(2, 2, 0)).then(|| PolyW::constant(qi(2))));
        assert_eq!(sub, x.pow(2).scale(&qi(3)));
        let v = p.eval(|_| Some(qi(2))).unwrap();
        assert_eq!(v, qi(12));
    }

    #[test]
    fn context_check() {
        let c = Ctx::new(1, 2).unwrap();
        assert!(PolyW::poly_add(&c, &w(1, 1, 1), &w(1, 1, 0)).is_ok());
        assert!(matches!(PolyW::poly_mul(&c, &w(2, 1, 0), &w(1, 1, 0)), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn display_is_canonical() {
        let p = &w(1, 1, 0).scale(&q(-1, 2)) + &PolyW::constant(qi(3));
        assert_eq!(p.to_string(), "3/1 + -1/2*W[1,1,0]");
    }
}
