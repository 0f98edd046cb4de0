//! Rational functions in two variables u, v over Q, stored reduced.
//!
//! Bivariate polynomials are polynomials in v with coefficients in Q[u];
//! gcds use the primitive pseudo-remainder sequence.

use std::fmt;

use num_traits::{One, Zero};

use super::ring::Ring;
use super::scalar::{fmt_frac, qi, Scalar};
use crate::error::{Error, Result};

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly(Vec<Scalar>);

impl UniPoly {
    pub fn new(mut c: Vec<Scalar>) -> UniPoly {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UniPoly(c)
    }

    pub fn zero() -> UniPoly {
        UniPoly(Vec::new())
    }

    pub fn constant(c: Scalar) -> UniPoly {
        UniPoly::new(vec![c])
    }

    /// x - root
    pub fn linear(root: Scalar) -> UniPoly {
        UniPoly::new(vec![-root, qi(1)])
    }

    pub fn x() -> UniPoly {
        UniPoly::new(vec![qi(0), qi(1)])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.0.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.0.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.0.len().max(o.0.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.0.len().max(o.0.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, s: &Scalar) -> UniPoly {
        UniPoly::new(self.0.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        (0..k).fold(UniPoly::constant(qi(1)), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        let mut quo = vec![Scalar::zero(); r.len().saturating_sub(dd)];
        let inv = qi(1) / d.lead();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() * &inv;
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            quo[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (UniPoly::new(quo), UniPoly::new(r))
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(qi(1) / self.lead()))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.0.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// p(x + s)
    pub fn shift(&self, s: &Scalar) -> UniPoly {
        let lin = UniPoly::new(vec![s.clone(), qi(1)]);
        self.0.iter().rev().fold(UniPoly::zero(), |acc, c| acc.mul(&lin).add(&UniPoly::constant(c.clone())))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_frac).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Polynomial in v with coefficients in Q[u].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly(Vec<UniPoly>);

impl BiPoly {
    fn new(mut c: Vec<UniPoly>) -> BiPoly {
        while c.last().is_some_and(UniPoly::is_zero) {
            c.pop();
        }
        BiPoly(c)
    }

    pub fn zero() -> BiPoly {
        BiPoly(Vec::new())
    }

    pub fn from_u(p: UniPoly) -> BiPoly {
        BiPoly::new(vec![p])
    }

    pub fn u() -> BiPoly {
        BiPoly::from_u(UniPoly::x())
    }

    pub fn v() -> BiPoly {
        BiPoly::new(vec![UniPoly::zero(), UniPoly::constant(qi(1))])
    }

    pub fn constant(c: Scalar) -> BiPoly {
        BiPoly::from_u(UniPoly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn vdeg(&self) -> usize {
        self.0.len() - 1
    }

    fn coeff(&self, k: usize) -> UniPoly {
        self.0.get(k).cloned().unwrap_or_default()
    }

    fn lead(&self) -> &UniPoly {
        self.0.last().expect("nonzero")
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let n = self.0.len().max(o.0.len());
        BiPoly::new((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &BiPoly) -> BiPoly {
        let n = self.0.len().max(o.0.len());
        BiPoly::new((0..n).map(|k| self.coeff(k).sub(&o.coeff(k))).collect())
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() || o.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BiPoly::new(out)
    }

    fn mul_u(&self, c: &UniPoly) -> BiPoly {
        BiPoly::new(self.0.iter().map(|a| a.mul(c)).collect())
    }

    fn div_u_exact(&self, c: &UniPoly) -> BiPoly {
        BiPoly::new(
            self.0
                .iter()
                .map(|a| {
                    let (q, r) = a.divrem(c);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    fn content(&self) -> UniPoly {
        self.0.iter().fold(UniPoly::zero(), |g, c| g.gcd(c))
    }

    fn primitive(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.div_u_exact(&self.content())
    }

    /// Pseudo-remainder in v.
    fn prem(&self, d: &BiPoly) -> BiPoly {
        let dd = d.vdeg();
        let l = d.lead().clone();
        let mut r = self.clone();
        while !r.is_zero() && r.vdeg() >= dd {
            let k = r.vdeg() - dd;
            let lr = r.lead().clone();
            let mut shifted = vec![UniPoly::zero(); k];
            shifted.extend(d.0.iter().map(|c| c.mul(&lr)));
            r = r.mul_u(&l).sub(&BiPoly::new(shifted));
        }
        r
    }

    /// gcd normalised so that its leading coefficient is monic in u.
    pub fn gcd(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return o.normalized();
        }
        if o.is_zero() {
            return self.normalized();
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.vdeg() < b.vdeg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.mul_u(&c).normalized()
    }

    fn normalized(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let s = qi(1) / self.lead().lead();
        BiPoly::new(self.0.iter().map(|c| c.scale(&s)).collect())
    }

    /// Exact quotient when `d` divides `self`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        let dd = d.vdeg();
        let mut r = self.clone();
        let mut quo = vec![UniPoly::zero(); self.0.len().saturating_sub(dd)];
        while !r.is_zero() && r.vdeg() >= dd {
            let k = r.vdeg() - dd;
            let (c, rem) = r.lead().divrem(d.lead());
            if !rem.is_zero() {
                return None;
            }
            let mut shifted = vec![UniPoly::zero(); k];
            shifted.extend(d.0.iter().map(|x| x.mul(&c)));
            r = r.sub(&BiPoly::new(shifted));
            quo[k] = c;
        }
        r.is_zero().then(|| BiPoly::new(quo))
    }

    pub fn eval(&self, u: &Scalar, v: &Scalar) -> Scalar {
        self.0.iter().rev().fold(Scalar::zero(), |acc, c| acc * v + c.eval(u))
    }

    fn scale(&self, s: &Scalar) -> BiPoly {
        BiPoly::new(self.0.iter().map(|c| c.scale(s)).collect())
    }
}

/// Reduced quotient num/den with den normalised to a monic leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: BiPoly,
    den: BiPoly,
}

impl RationalFunction {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction::constant(Scalar::zero()));
        }
        let g = num.gcd(&den);
        let (n, d) = (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"));
        let s = qi(1) / d.lead().lead();
        Ok(RationalFunction { num: n.scale(&s), den: d.scale(&s) })
    }

    pub fn constant(c: Scalar) -> RationalFunction {
        RationalFunction { num: BiPoly::constant(c), den: BiPoly::constant(qi(1)) }
    }

    pub fn u() -> RationalFunction {
        RationalFunction { num: BiPoly::u(), den: BiPoly::constant(qi(1)) }
    }

    pub fn v() -> RationalFunction {
        RationalFunction { num: BiPoly::v(), den: BiPoly::constant(qi(1)) }
    }

    pub fn from_poly(p: BiPoly) -> RationalFunction {
        RationalFunction { num: p, den: BiPoly::constant(qi(1)) }
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BiPoly {
        &self.den
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).expect("nonzero den");
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).expect("nonzero den")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.scale(&qi(-1)), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::constant(Scalar::zero());
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero den")
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    /// Value at (u, v); None at a pole.
    pub fn eval(&self, u: &Scalar, v: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(u, v);
        (!d.is_zero()).then(|| self.num.eval(u, v) / d)
    }

    /// Equality decided by cross-multiplication.
    pub fn equal(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl Ring for RationalFunction {
    fn zero_elem() -> Self {
        Self::constant(Scalar::zero())
    }
    fn one_elem() -> Self {
        Self::constant(Scalar::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn from_scalar(s: &Scalar) -> Self {
        Self::constant(s.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::q;

    fn c(x: i64) -> RationalFunction {
        RationalFunction::constant(qi(x))
    }

    #[test]
    fn univariate_gcd() {
        let a = UniPoly::linear(qi(1)).mul(&UniPoly::linear(qi(2)));
        let b = UniPoly::linear(qi(1)).mul(&UniPoly::linear(qi(-3)));
        assert_eq!(a.gcd(&b), UniPoly::linear(qi(1)));
        assert_eq!(a.shift(&qi(1)).eval(&qi(0)), a.eval(&qi(1)));
    }

    #[test]
    fn reduction_cancels_common_factors() {
        let u = RationalFunction::u();
        let v = RationalFunction::v();
        let uv = u.sub(&v);
        let num = uv.mul(&u.add(&v));
        let f = num.div(&uv).unwrap();
        assert_eq!(f, u.add(&v));
        assert!(f.denominator().eval(&qi(7), &qi(5)) == qi(1));
    }

    #[test]
    fn equality_and_evaluation() {
        let u = RationalFunction::u();
        let v = RationalFunction::v();
        let a = c(1).div(&u.sub(&v)).unwrap();
        let b = c(1).div(&v.sub(&u)).unwrap();
        assert!(!a.equal(&b));
        assert!(a.equal(&b.neg()));
        assert_eq!(a.eval(&qi(3), &qi(1)), Some(q(1, 2)));
        assert_eq!(a.eval(&qi(2), &qi(2)), None);
        assert!(c(1).div(&c(0)).is_err());
    }

    #[test]
    fn bivariate_gcd_with_u_content() {
        // (u+1)(u v - 1) and (u+1)(v + u)
        let u = BiPoly::u();
        let v = BiPoly::v();
        let one = BiPoly::constant(qi(1));
        let a = u.add(&one).mul(&u.mul(&v).sub(&one));
        let b = u.add(&one).mul(&v.add(&u));
        assert_eq!(a.gcd(&b), u.add(&one));
    }
}
