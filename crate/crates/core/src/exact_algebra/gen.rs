use std::fmt;

/// Which generator family a variable belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// W^{ab}_j, gauge-fixed W-algebra generators.
    W,
    /// T^{ij}_n, truncated Yangian modes (n >= 1).
    T,
    /// J^{ab}_{jm}, unconstrained gl(Np) currents.
    J,
    /// lambda^{ab}_{jm}, gauge parameters of the soldering procedure.
    Lambda,
    /// Formal parameters; mode 0 is hbar.
    Aux,
}

/// A polynomial variable. Gl(N) indices `a`, `b` are 1-based.
///
/// Field order drives the total order: family, then mode, then matrix
/// indices, then the sl(2) weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub family: Family,
    pub mode: i16,
    pub a: u8,
    pub b: u8,
    pub m: i16,
}

impl Gen {
    pub fn w(a: usize, b: usize, j: usize) -> Gen {
        Gen { family: Family::W, mode: j as i16, a: a as u8, b: b as u8, m: j as i16 }
    }

    pub fn t(i: usize, j: usize, n: usize) -> Gen {
        Gen { family: Family::T, mode: n as i16, a: i as u8, b: j as u8, m: 0 }
    }

    pub fn j(a: usize, b: usize, j: usize, m: i64) -> Gen {
        Gen { family: Family::J, mode: j as i16, a: a as u8, b: b as u8, m: m as i16 }
    }

    pub fn lambda(a: usize, b: usize, j: usize, m: i64) -> Gen {
        Gen { family: Family::Lambda, mode: j as i16, a: a as u8, b: b as u8, m: m as i16 }
    }

    pub fn aux(k: i16) -> Gen {
        Gen { family: Family::Aux, mode: k, a: 0, b: 0, m: 0 }
    }

    pub fn hbar() -> Gen {
        Gen::aux(0)
    }

    pub fn ai(&self) -> usize {
        self.a as usize
    }

    pub fn bi(&self) -> usize {
        self.b as usize
    }

    pub fn mode(&self) -> usize {
        self.mode as usize
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::W => write!(f, "W[{},{},{}]", self.a, self.b, self.mode),
            Family::T => write!(f, "T[{},{},{}]", self.a, self.b, self.mode),
            Family::J => write!(f, "J[{},{},{},{}]", self.a, self.b, self.mode, self.m),
            Family::Lambda => write!(f, "L[{},{},{},{}]", self.a, self.b, self.mode, self.m),
            Family::Aux if self.mode == 0 => write!(f, "hbar"),
            Family::Aux => write!(f, "X{}", self.mode),
        }
    }
}

/// The (N, p) pair every structure is built for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ctx {
    pub n: usize,
    pub p: usize,
}

impl Ctx {
    pub fn new(n: usize, p: usize) -> crate::Result<Ctx> {
        if n == 0 || p == 0 {
            return Err(crate::Error::InvalidInput(format!("need N >= 1 and p >= 1, got N={n}, p={p}")));
        }
        Ok(Ctx { n, p })
    }

    /// Whether a variable is a legal generator in this context.
    pub fn admits(&self, g: &Gen) -> bool {
        let idx_ok = (1..=self.n).contains(&g.ai()) && (1..=self.n).contains(&g.bi());
        match g.family {
            Family::W => idx_ok && (g.mode as usize) < self.p,
            Family::T => idx_ok && g.mode >= 1 && (g.mode as usize) <= self.p,
            Family::J | Family::Lambda => {
                idx_ok && (g.mode as usize) < self.p && (g.m.unsigned_abs() as i16) <= g.mode
            }
            Family::Aux => true,
        }
    }

    /// All W^{ab}_j, ordered by (j, a, b).
    pub fn w_gens(&self) -> Vec<Gen> {
        let mut out = Vec::new();
        for j in 0..self.p {
            for a in 1..=self.n {
                for b in 1..=self.n {
                    out.push(Gen::w(a, b, j));
                }
            }
        }
        out
    }

    /// All T^{ij}_n with 1 <= n <= p.
    pub fn t_gens(&self) -> Vec<Gen> {
        let mut out = Vec::new();
        for n in 1..=self.p {
            for a in 1..=self.n {
                for b in 1..=self.n {
                    out.push(Gen::t(a, b, n));
                }
            }
        }
        out
    }

    /// All J^{ab}_{jm}.
    pub fn j_gens(&self) -> Vec<Gen> {
        let mut out = Vec::new();
        for j in 0..self.p {
            for m in -(j as i64)..=(j as i64) {
                for a in 1..=self.n {
                    for b in 1..=self.n {
                        out.push(Gen::j(a, b, j, m));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_family_mode_indices() {
        assert!(Gen::w(2, 2, 0) < Gen::w(1, 1, 1));
        assert!(Gen::w(1, 2, 1) < Gen::w(2, 1, 1));
        assert!(Gen::w(2, 2, 5) < Gen::t(1, 1, 1));
        assert_eq!(Gen::t(1, 2, 3).to_string(), "T[1,2,3]");
    }

    #[test]
    fn admits_respects_bounds() {
        let c = Ctx::new(2, 3).unwrap();
        assert!(c.admits(&Gen::w(2, 1, 2)));
        assert!(!c.admits(&Gen::w(3, 1, 0)));
        assert!(!c.admits(&Gen::w(1, 1, 3)));
        assert!(c.admits(&Gen::t(1, 1, 3)));
        assert!(!c.admits(&Gen::t(1, 1, 0)));
        assert!(!c.admits(&Gen::j(1, 1, 1, -2)));
        assert_eq!(c.j_gens().len(), 4 * 9);
        assert!(Ctx::new(2, 0).is_err());
    }
}
