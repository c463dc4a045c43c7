//! Small dense square matrices over [`Cyclotomic`].

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::cyclotomic::Cyclotomic;
use crate::error::Result;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![Cyclotomic::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| Cyclotomic::one()).collect())
    }

    pub fn diagonal(entries: Vec<Cyclotomic>) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Cyclotomic) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Cyclotomic> {
        (0..self.n).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &Cyclotomic> {
        self.data.iter()
    }

    pub fn map(&self, f: impl FnMut(&Cyclotomic) -> Cyclotomic) -> Self {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl FnMut(&Cyclotomic) -> Result<Cyclotomic>) -> Result<Self> {
        Ok(Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(Cyclotomic::conj)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].try_add(&a.try_mul(b)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_scale(&self, c: &Cyclotomic) -> Result<Matrix> {
        self.try_map(|x| x.try_mul(c))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Matrix {
        self.try_scale(c).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Multiplies column `j` by `d[j]`, i.e. `self · diag(d)`.
    pub fn try_mul_diag(&self, d: &[Cyclotomic]) -> Result<Matrix> {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self[(i, j)].try_mul(&d[j])?;
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Matrix {
        self.map(|x| -x)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn try_pow(&self, e: u32) -> Result<Matrix> {
        let mut acc = Self::identity(self.n);
        for _ in 0..e {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Applies a relabeling: `out[(π(i), π(j))] = self[(i, j)]`.
    pub fn permuted(&self, perm: &[usize]) -> Matrix {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(perm[i], perm[j])] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Least common multiple of the conductors of all entries.
    pub fn conductor(&self) -> u64 {
        self.data
            .iter()
            .fold(1, |acc, x| crate::arith::lcm(acc, x.conductor()))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Cyclotomic;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclotomic {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclotomic {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_identity() {
        let i = Cyclotomic::zeta(4);
        let m = Matrix::from_rows(vec![
            vec![Cyclotomic::zero(), i.clone()],
            vec![i.clone(), Cyclotomic::zero()],
        ]);
        let sq = m.mul(&m);
        assert_eq!(sq, Matrix::identity(2).neg());
        assert!(m.is_symmetric());
        assert_eq!(m.conj().transpose().mul(&m), Matrix::identity(2));
        assert_eq!(m.try_pow(4).unwrap(), Matrix::identity(2));
        assert_eq!(m.conductor(), 4);
    }
}
