use num_traits::Zero;

use super::{explicit_matrix, GlpBasis};
use crate::exact_algebra::scalar::{factorial, q, qbig, qi, sign, Scalar};
use crate::exact_algebra::{Gen, PolyW};

/// One closed-form coefficient compared against the trace formula.
#[derive(Clone, Debug)]
pub struct ClosedFormCheck {
    pub name: &'static str,
    pub labels: [(usize, i64); 3],
    pub expected: Scalar,
    pub computed: Scalar,
}

impl ClosedFormCheck {
    pub fn holds(&self) -> bool {
        self.expected == self.computed
    }
}

fn delta(a: usize, b: usize) -> Scalar {
    if a == b {
        qi(1)
    } else {
        qi(0)
    }
}

/// Evaluates the tabulated special values of the coefficients for every
/// admissible label combination at this p.
pub fn closed_form_checks(b: &GlpBasis) -> Vec<ClosedFormCheck> {
    let p = b.p();
    let eta = |j: usize| if j < p { b.eta(j).clone() } else { qi(0) };
    let mut out = Vec::new();
    let mut push = |name, labels: [(usize, i64); 3], expected: Scalar| {
        let [(j, m), (l, n), (r, s)] = labels;
        let computed = b.coeff(j, m, l, n, r, s);
        out.push(ClosedFormCheck { name, labels, expected, computed });
    };
    for r in 0..p {
        for k in 0..p {
            for j in 0..p {
                let (ri, ki, ji) = (r as i64, k as i64, j as i64);
                let top = sign(ki) * eta(j + k) / b.eta(j) * delta(r, j + k);
                push("top-left", [(r, -ri), (k, ki), (j, -ji)], top.clone());
                push("top-right", [(k, ki), (r, -ri), (j, -ji)], top);
                if r >= 1 && j >= 1 {
                    let c = sign(ki) * q(ji, ji + ki) * eta(j + k) / b.eta(j) * delta(r, j + k);
                    push("next-left", [(r, 1 - ri), (k, ki), (j, 1 - ji)], c.clone());
                    push("next-right", [(k, ki), (r, 1 - ri), (j, 1 - ji)], c);
                }
                if j >= 1 {
                    let base = qi(ki * ji) * if j + k >= 1 { eta(j + k - 1) } else { qi(0) } / b.eta(j)
                        * delta(r + 1, j + k);
                    push("mixed-left", [(r, -ri), (k, ki), (j, 1 - ji)], -sign(ki) * &base);
                    push("mixed-right", [(k, ki), (r, -ri), (j, 1 - ji)], sign(ki) * base);
                }
            }
        }
    }
    if p >= 2 {
        for k in 1..p {
            let ki = k as i64;
            let ck = sign(ki + 1) * b.eta(k) / b.eta(1);
            push("c_k", [(k, ki), (k, 1 - ki), (1, 1)], ck.clone());
            push("c_k swapped", [(k, 1 - ki), (k, ki), (1, 1)], -ck.clone());
            let low = q(1, ki * (2 * ki - 1)) * &ck;
            push("c_k lower-left", [(k, ki), (k - 1, 1 - ki), (1, 1)], low.clone());
            push("c_k lower-right", [(k - 1, 1 - ki), (k, ki), (1, 1)], low);
            if k + 1 < p {
                let pi = p as i64;
                let up = -qi((ki + 1) * (pi * pi - (ki + 1) * (ki + 1))) / qi(2 * ki + 3) * &ck;
                push("c_k upper-left", [(k + 1, 1 - ki), (k, ki), (1, 1)], up.clone());
                push("c_k upper-right", [(k, ki), (k + 1, 1 - ki), (1, 1)], up);
            }
        }
    }
    out
}

/// Cyclic and reflection symmetries over all label triples. Returns the
/// number of failures of each, in that order.
pub fn relation_checks(b: &GlpBasis) -> (usize, usize) {
    let labels = b.labels();
    let fact = |x: i64| qbig(factorial(x));
    let (mut cyc, mut refl) = (0, 0);
    for &(j, m) in &labels {
        for &(l, n) in &labels {
            for &(r, s) in &labels {
                let v = b.coeff(j, m, l, n, r, s);
                let c1 = sign(s + m) * b.eta(j) / b.eta(r) * b.coeff(l, n, r, -s, j, -m);
                let c2 = sign(s + n) * b.eta(l) / b.eta(r) * b.coeff(r, -s, j, m, l, -n);
                if v != c1 || v != c2 {
                    cyc += 1;
                }
                let (ji, li, ri) = (j as i64, l as i64, r as i64);
                let f = fact(ji - m) * fact(li - n) * fact(ri + s) / (fact(ji + m) * fact(li + n) * fact(ri - s));
                if v != f * b.coeff(l, -n, j, -m, r, -s) {
                    refl += 1;
                }
            }
        }
    }
    (cyc, refl)
}

/// (j!)^2 times the coefficient of u^p z^j y^{j-m} x^{k-1} in
/// u / ((1 + y(1-x)) (1 - u(1 + z + x(1-u)))).
pub fn genfun_coefficient(p: usize, j: usize, m: i64, k: usize) -> Scalar {
    let (x, z, u) = (Gen::aux(1), Gen::aux(3), Gen::aux(4));
    let var = PolyW::var;
    let one = PolyW::one();
    let s = (j as i64 - m) as u32;
    let one_minus_x = &one - &var(x);
    // 1/(1 + y(1-x)) contributes (-1)^s y^s (1-x)^s at order y^s
    let y_part = one_minus_x.pow(s).scale(&sign(s as i64));
    let w = &(&(&one + &var(z)) + &var(x)) - &(&var(x) * &var(u));
    let mut series = PolyW::zero();
    let mut wt = PolyW::one();
    for t in 0..p {
        let ut = var(u).pow(t as u32 + 1);
        series = &series + &(&ut * &wt);
        wt = &wt * &w;
    }
    let full = &series * &y_part;
    let c = full.coeff_of_power(&u, p as u32).coeff_of_power(&z, j as u32).coeff_of_power(&x, k as u32 - 1);
    let c = c.constant_term();
    let jf = qbig(factorial(j as i64));
    if c.is_zero() {
        return qi(0);
    }
    jf.clone() * jf * c
}

/// Entrywise comparison of the written-out a^k_{jm} sums with the basis
/// built by descending from M_jj. Returns mismatching labels.
pub fn explicit_formula_mismatches(b: &GlpBasis) -> Vec<(usize, i64)> {
    b.labels().into_iter().filter(|&(j, m)| explicit_matrix(b.p(), j, m) != *b.mat(j, m)).collect()
}
