use std::collections::HashMap;

use super::gen::Gen;
use super::poly::PolyW;

/// Poisson bracket on generators, extended to polynomials by Leibniz.
pub trait GeneratorBracket {
    fn gen_bracket(&self, x: &Gen, y: &Gen) -> PolyW;

    /// {x, y} = sum_{g,h} d_g x d_h y {g, h}
    fn bracket(&self, x: &PolyW, y: &PolyW) -> PolyW {
        let xv: Vec<(Gen, PolyW)> = x.vars().into_iter().map(|g| (g, x.derivative(&g))).collect();
        let yv: Vec<(Gen, PolyW)> = y.vars().into_iter().map(|h| (h, y.derivative(&h))).collect();
        let mut out = PolyW::zero();
        for (g, dx) in &xv {
            for (h, dy) in &yv {
                let gh = self.gen_bracket(g, h);
                if gh.is_zero() {
                    continue;
                }
                out = &out + &(&(dx * dy) * &gh);
            }
        }
        out
    }

    /// {g, P} for a single generator, cheaper than the general case.
    fn bracket_gen_poly(&self, g: &Gen, y: &PolyW) -> PolyW {
        let mut out = PolyW::zero();
        for h in y.vars() {
            let gh = self.gen_bracket(g, &h);
            if !gh.is_zero() {
                out = &out + &(&y.derivative(&h) * &gh);
            }
        }
        out
    }

    /// Jacobiator {x,{y,z}} + {y,{z,x}} + {z,{x,y}}.
    fn jacobiator(&self, x: &PolyW, y: &PolyW, z: &PolyW) -> PolyW {
        let a = self.bracket(x, &self.bracket(y, z));
        let b = self.bracket(y, &self.bracket(z, x));
        let c = self.bracket(z, &self.bracket(x, y));
        &(&a + &b) + &c
    }
}

/// Bracket stored explicitly on ordered generator pairs. Pairs not present
/// bracket to zero; the reversed pair is filled in by antisymmetry.
#[derive(Clone, Debug, Default)]
pub struct BracketTable {
    gens: Vec<Gen>,
    table: HashMap<(Gen, Gen), PolyW>,
}

impl BracketTable {
    pub fn new(gens: Vec<Gen>) -> Self {
        BracketTable { gens, table: HashMap::new() }
    }

    /// Builds the table by evaluating `f` on every pair g <= h.
    pub fn from_fn<F: FnMut(&Gen, &Gen) -> PolyW>(gens: Vec<Gen>, mut f: F) -> Self {
        let mut t = BracketTable::new(gens.clone());
        for (i, g) in gens.iter().enumerate() {
            for h in &gens[i..] {
                let v = f(g, h);
                t.insert(*g, *h, v);
            }
        }
        t
    }

    pub fn insert(&mut self, g: Gen, h: Gen, v: PolyW) {
        if v.is_zero() {
            self.table.remove(&(g, h));
            self.table.remove(&(h, g));
            return;
        }
        self.table.insert((h, g), -&v);
        self.table.insert((g, h), v);
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn get(&self, g: &Gen, h: &Gen) -> PolyW {
        self.table.get(&(*g, *h)).cloned().unwrap_or_default()
    }

    /// Nonzero entries over ordered pairs with g < h, sorted.
    pub fn entries(&self) -> Vec<(Gen, Gen, PolyW)> {
        let mut v: Vec<_> = self
            .table
            .iter()
            .filter(|((g, h), _)| g < h)
            .map(|((g, h), p)| (*g, *h, p.clone()))
            .collect();
        v.sort_by_key(|a| (a.0, a.1));
        v
    }
}

impl GeneratorBracket for BracketTable {
    fn gen_bracket(&self, x: &Gen, y: &Gen) -> PolyW {
        self.get(x, y)
    }
}

/// Checks the Jacobi identity on every generator triple.
pub fn jacobi_holds<B: GeneratorBracket + ?Sized>(b: &B, gens: &[Gen]) -> Result<(), (Gen, Gen, Gen, PolyW)> {
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate().skip(i + 1) {
            let xy = b.gen_bracket(x, y);
            for z in &gens[j + 1..] {
                let yz = b.gen_bracket(y, z);
                let zx = b.gen_bracket(z, x);
                let mut acc = b.bracket_gen_poly(x, &yz);
                acc = &acc + &b.bracket_gen_poly(y, &zx);
                acc = &acc + &b.bracket_gen_poly(z, &xy);
                if !acc.is_zero() {
                    return Err((*x, *y, *z, acc));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::qi;

    /// Lie-Poisson bracket of gl(2): {E_ab, E_cd} = d_bc E_ad - d_ad E_cb.
    fn gl2() -> BracketTable {
        let gens: Vec<Gen> = (1..=2).flat_map(|a| (1..=2).map(move |b| Gen::w(a, b, 0))).collect();
        BracketTable::from_fn(gens, |g, h| {
            let (a, b, c, d) = (g.ai(), g.bi(), h.ai(), h.bi());
            let mut out = PolyW::zero();
            if b == c {
                out = &out + &PolyW::var(Gen::w(a, d, 0));
            }
            if a == d {
                out = &out - &PolyW::var(Gen::w(c, b, 0));
            }
            out
        })
    }

    #[test]
    fn leibniz_and_jacobi() {
        let t = gl2();
        assert!(jacobi_holds(&t, t.gens()).is_ok());
        // the quadratic Casimir is central
        let e = |a, b| PolyW::var(Gen::w(a, b, 0));
        let cas = &(&(&e(1, 1) * &e(1, 1)) + &(&e(2, 2) * &e(2, 2))) + &(&(&e(1, 2) * &e(2, 1)).scale(&qi(2)));
        for g in t.gens() {
            assert!(t.bracket(&PolyW::var(*g), &cas).is_zero());
        }
        let x = &e(1, 2) * &e(1, 1);
        let y = e(2, 1);
        assert_eq!(t.bracket(&x, &y), -&t.bracket(&y, &x));
    }
}
