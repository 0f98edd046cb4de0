use std::ops::{Index, IndexMut};

use num_traits::Zero;

use super::ring::Ring;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Dense matrix over an exact ring, row-major, 0-based.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero_elem(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one_elem();
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> T>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&T> {
        if i >= self.rows || j >= self.cols {
            return Err(Error::OutOfRange(format!("({i},{j}) in {}x{}", self.rows, self.cols)));
        }
        Ok(&self.data[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero_elem)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        let c = self.cols;
        self.data.iter().enumerate().map(move |(k, v)| ((k / c, k % c), v))
    }

    pub fn map<U: Ring, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if b.is_zero_elem() {
                        continue;
                    }
                    out.data[i * other.cols + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(out)
    }

    /// Product of matrices whose shapes are known to agree.
    pub fn dot(&self, other: &Self) -> Self {
        self.mul(other).expect("matrix shapes agree")
    }

    fn zip(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, T::add_ref)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, T::sub_ref)
    }

    pub fn plus(&self, other: &Self) -> Self {
        self.add(other).expect("matrix shapes agree")
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.sub(other).expect("matrix shapes agree")
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero_elem() {
                a.add_assign_ref(b);
            }
        }
    }

    pub fn neg(&self) -> Self {
        self.map(T::neg_ref)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|x| x.scale(s))
    }

    pub fn scale_by(&self, s: &T) -> Self {
        self.map(|x| x.mul_ref(s))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero_elem();
        for i in 0..self.rows.min(self.cols) {
            acc.add_assign_ref(&self[(i, i)]);
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Kronecker product; `(i1, i2)` maps to `i1 * other.rows + i2`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        Self::from_fn(r, c, |i, j| {
            let (i1, i2) = (i / other.rows, i % other.rows);
            let (j1, j2) = (j / other.cols, j % other.cols);
            self[(i1, j1)].mul_ref(&other[(i2, j2)])
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.dot(self);
        }
        acc
    }

    pub fn is_scalar_multiple_of_identity(&self) -> Option<T> {
        if !self.is_square() {
            return None;
        }
        let d = if self.rows == 0 { T::zero_elem() } else { self[(0, 0)].clone() };
        for ((i, j), v) in self.entries() {
            let want = if i == j { &d } else { &T::zero_elem() };
            if v != want {
                return None;
            }
        }
        Some(d)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix<Scalar> {
    /// Elementary matrix E_{ij} (0-based) of size n.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Scalar::from_integer(1.into());
        m
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !Zero::is_zero(&self[(i, c)])) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = Scalar::from_integer(1.into()) / &self[(r, c)];
            for j in 0..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || Zero::is_zero(&self[(i, c)]) {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    let v = &self[(r, j)] * &f;
                    self[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::from_integer(1.into())
            } else {
                Scalar::zero()
            }
        });
        let piv = aug.rref();
        if piv.len() < n || (n > 0 && piv[n - 1] >= n) {
            return Err(Error::Degenerate("singular matrix".into()));
        }
        Ok(Self::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    /// Solves `self * x = rhs` for one particular solution.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        let (n, m) = (self.rows, self.cols);
        let mut aug = Self::from_fn(n, m + 1, |i, j| if j < m { self[(i, j)].clone() } else { rhs[i].clone() });
        let piv = aug.rref();
        if piv.last() == Some(&m) {
            return None;
        }
        let mut x = vec![Scalar::zero(); m];
        for (r, &c) in piv.iter().enumerate() {
            x[c] = aug[(r, m)].clone();
        }
        Some(x)
    }

    /// Basis of the null space, as column vectors.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut a = self.clone();
        let piv = a.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::from_integer(1.into());
                for (r, &c) in piv.iter().enumerate() {
                    v[c] = -a[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !Zero::is_zero(a) && !Zero::is_zero(x) {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }
}

/// Characteristic-type coefficients via Faddeev-LeVerrier:
/// det(x*I - A) = sum_k c[k] x^{n-k}, c[0] = 1.
pub fn charpoly<T: Ring>(a: &Matrix<T>) -> Vec<T> {
    let n = a.rows();
    let mut coeffs = vec![T::one_elem()];
    let mut m = Matrix::<T>::identity(n);
    for k in 1..=n {
        let am = a.dot(&m);
        let ck = am.trace().scale(&Scalar::new((-1).into(), (k as i64).into()));
        m = am.plus(&Matrix::identity(n).scale_by(&ck));
        coeffs.push(ck);
    }
    coeffs
}

/// Determinant via the characteristic polynomial; works over any Q-algebra.
pub fn det<T: Ring>(a: &Matrix<T>) -> T {
    let n = a.rows();
    let c = charpoly(a);
    if n.is_multiple_of(2) {
        c[n].clone()
    } else {
        c[n].neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::{q, qi};

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Scalar> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(qi).collect()).collect()).unwrap()
    }

    #[test]
    fn product_and_shape_errors() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let b = m(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.dot(&b), m(vec![vec![2, 1], vec![4, 3]]));
        let c = m(vec![vec![1, 2, 3]]);
        assert!(matches!(a.mul(&c), Err(Error::ShapeMismatch(_))));
        assert!(matches!(a.get(2, 0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn inverse_and_det() {
        let a = m(vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.dot(&inv), Matrix::identity(3));
        assert_eq!(det(&a), qi(18));
        assert!(m(vec![vec![1, 2], vec![2, 4]]).inverse().is_err());
        assert_eq!(charpoly(&m(vec![vec![1, 2], vec![3, 4]])), vec![qi(1), qi(-5), qi(-2)]);
    }

    #[test]
    fn kernel_and_solve() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.apply(v).iter().all(Zero::is_zero));
        }
        let x = a.solve(&[qi(1), qi(2)]).unwrap();
        assert_eq!(a.apply(&x), vec![qi(1), qi(2)]);
        assert!(a.solve(&[qi(1), qi(3)]).is_none());
        assert_eq!(a.scale(&q(1, 2))[(0, 1)], qi(1));
    }

    #[test]
    fn kron_layout() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let i = Matrix::<Scalar>::identity(2);
        let k = a.kron(&i);
        assert_eq!(k[(2, 0)], qi(3));
        assert_eq!(k[(3, 1)], qi(3));
        assert_eq!(k[(2, 1)], qi(0));
    }
}
