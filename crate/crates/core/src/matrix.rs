//! Dense matrices over a rig, read as arrows of the matrix category.
//!
//! A matrix with `rows` rows and `cols` columns is an arrow from an object of
//! dimension `cols` to one of dimension `rows`. [`Matrix::compose`] is
//! diagram order: `f.compose(&g)` is "f then g", whose entries are
//! `sum_j g[k][j] * f[j][i]` with the rig product in that order.

use std::fmt;
use std::ops::Range;

use crate::error::{dims, MatError};
use crate::rig::{DaggerRig, Rig, Ring};
use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

/// An ordered split of a dimension into biproduct summands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    sizes: Vec<usize>,
}

impl BlockPartition {
    pub fn new(sizes: Vec<usize>) -> Self {
        BlockPartition { sizes }
    }

    /// Partition of `dim` into `sizes`, checking the total.
    pub fn of(dim: usize, sizes: Vec<usize>) -> Result<Self, MatError> {
        let p = BlockPartition { sizes };
        p.check(dim)?;
        Ok(p)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn size(&self, i: usize) -> usize {
        self.sizes[i]
    }

    pub fn range(&self, i: usize) -> Range<usize> {
        let start: usize = self.sizes[..i].iter().sum();
        start..start + self.sizes[i]
    }

    pub fn check(&self, dim: usize) -> Result<(), MatError> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(MatError::PartitionMismatch {
                sizes: self.sizes.clone(),
                dim,
            })
        }
    }
}

impl<R: Rig> Matrix<R> {
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Result<Self, MatError> {
        if data.len() != rows * cols {
            return Err(dims(
                "new",
                format!("{} entries for a {rows}x{cols} matrix", data.len()),
            ));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Matrix from a list of rows; an empty list gives the 0x0 matrix.
    ///
    /// # Panics
    /// If the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix from rows of element strings in the rig grammar.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self, MatError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(dims("parse_rows", "ragged rows"));
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            for s in row.iter() {
                data.push(R::parse(s)?);
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { R::one() } else { R::zero() })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    /// Diagonal matrix with the given entries.
    pub fn diag(entries: &[R]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |r, c| if r == c { entries[r].clone() } else { R::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Dimension of the domain (number of columns).
    pub fn dom(&self) -> usize {
        self.cols
    }

    /// Dimension of the codomain (number of rows).
    pub fn cod(&self) -> usize {
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: R) {
        self.data[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[R] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn map<S: Rig>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Largest word length among the entries.
    pub fn degree(&self) -> usize {
        self.data.iter().map(R::degree).max().unwrap_or(0)
    }

    /// Diagram-order composite "self then g".
    pub fn compose(&self, g: &Matrix<R>) -> Result<Matrix<R>, MatError> {
        if self.rows != g.cols {
            return Err(dims(
                "compose",
                format!(
                    "{}x{} then {}x{}: codomain {} is not domain {}",
                    self.rows, self.cols, g.rows, g.cols, self.rows, g.cols
                ),
            ));
        }
        Ok(Self::from_fn(g.rows, self.cols, |k, i| {
            let mut acc = R::zero();
            for j in 0..self.rows {
                let a = g.get(k, j);
                let b = self.get(j, i);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.plus(&a.times(b));
                }
            }
            acc
        }))
    }

    /// Diagram-order composite "self then g".
    ///
    /// # Panics
    /// On a dimension mismatch.
    pub fn then(&self, g: &Matrix<R>) -> Matrix<R> {
        self.compose(g).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Textbook product `self · rhs`, the same arrow as `rhs.then(self)`.
    ///
    /// # Panics
    /// On a dimension mismatch.
    pub fn product(&self, rhs: &Matrix<R>) -> Matrix<R> {
        rhs.then(self)
    }

    /// `n`-fold composite of an endomorphism with itself.
    pub fn pow(&self, n: usize) -> Matrix<R> {
        assert!(self.is_square(), "pow of a non-square matrix");
        (0..n).fold(Self::identity(self.rows), |acc, _| acc.then(self))
    }

    pub fn add(&self, other: &Matrix<R>) -> Result<Matrix<R>, MatError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(dims(
                "add",
                format!(
                    "{}x{} + {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            ));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    /// Entrywise sum.
    ///
    /// # Panics
    /// On a dimension mismatch.
    pub fn plus(&self, other: &Matrix<R>) -> Matrix<R> {
        self.add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Entrywise negation, when every entry has a negative.
    pub fn try_negate(&self) -> Verdict<Matrix<R>> {
        let mut data = Vec::with_capacity(self.data.len());
        for a in &self.data {
            match a.negate() {
                Verdict::Exists(n) => data.push(n),
                Verdict::NotExists(c) => return Verdict::NotExists(c),
                Verdict::Unknown(r) => return Verdict::Unknown(r),
            }
        }
        Verdict::Exists(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn transpose(&self) -> Matrix<R> {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Block-diagonal direct sum.
    pub fn oplus(&self, g: &Matrix<R>) -> Matrix<R> {
        Self::from_fn(self.rows + g.rows, self.cols + g.cols, |r, c| {
            match (r < self.rows, c < self.cols) {
                (true, true) => self.get(r, c).clone(),
                (false, false) => g.get(r - self.rows, c - self.cols).clone(),
                _ => R::zero(),
            }
        })
    }

    /// The symmetry `a ⊕ b → b ⊕ a`.
    pub fn swap(a: usize, b: usize) -> Matrix<R> {
        Self::from_fn(a + b, a + b, |r, c| {
            let image = if c < a { b + c } else { c - a };
            if r == image {
                R::one()
            } else {
                R::zero()
            }
        })
    }

    /// Permutation exchanging summands `i` and `j` of a partition; the result
    /// maps the partitioned object to the object with those summands swapped.
    pub fn symmetry(p: &BlockPartition, i: usize, j: usize) -> Matrix<R> {
        let mut order: Vec<usize> = (0..p.len()).collect();
        order.swap(i, j);
        let n = p.dim();
        let mut out = Self::zero(n, n);
        let mut target = 0;
        for &s in &order {
            for (k, c) in p.range(s).enumerate() {
                out.set(target + k, c, R::one());
            }
            target += p.size(s);
        }
        out
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> Matrix<R> {
        Self::from_fn(rows.len(), cols.len(), |r, c| {
            self.get(rows.start + r, cols.start + c).clone()
        })
    }

    /// Component from domain summand `j` to codomain summand `i`.
    pub fn block(
        &self,
        row_part: &BlockPartition,
        col_part: &BlockPartition,
        i: usize,
        j: usize,
    ) -> Result<Matrix<R>, MatError> {
        row_part.check(self.rows)?;
        col_part.check(self.cols)?;
        Ok(self.submatrix(row_part.range(i), col_part.range(j)))
    }

    /// Inverse of [`Matrix::block`]: `blocks[i][j]` is the component from
    /// domain summand `j` to codomain summand `i`.
    pub fn assemble(
        blocks: &[Vec<Matrix<R>>],
        row_part: &BlockPartition,
        col_part: &BlockPartition,
    ) -> Result<Matrix<R>, MatError> {
        if blocks.len() != row_part.len() || blocks.iter().any(|b| b.len() != col_part.len()) {
            return Err(dims("assemble", "block grid does not match partitions"));
        }
        let mut out = Self::zero(row_part.dim(), col_part.dim());
        for (i, row) in blocks.iter().enumerate() {
            for (j, b) in row.iter().enumerate() {
                let (rr, cr) = (row_part.range(i), col_part.range(j));
                if b.rows != rr.len() || b.cols != cr.len() {
                    return Err(dims(
                        "assemble",
                        format!("block ({i},{j}) is {}x{}", b.rows, b.cols),
                    ));
                }
                for r in 0..b.rows {
                    for c in 0..b.cols {
                        out.set(rr.start + r, cr.start + c, b.get(r, c).clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Two-by-two block matrix `[[a, b], [c, d]]` in row/column layout.
    ///
    /// # Panics
    /// If the blocks do not fit together.
    pub fn blocks2(a: &Matrix<R>, b: &Matrix<R>, c: &Matrix<R>, d: &Matrix<R>) -> Matrix<R> {
        let rp = BlockPartition::new(vec![a.rows, c.rows]);
        let cp = BlockPartition::new(vec![a.cols, b.cols]);
        Self::assemble(
            &[vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]],
            &rp,
            &cp,
        )
        .unwrap_or_else(|e| panic!("{e}"))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.rows, other.rows, "hcat row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vcat(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, other.cols, "vcat column mismatch");
        Self::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                other.get(r - self.rows, c).clone()
            }
        })
    }
}

impl<R: DaggerRig> Matrix<R> {
    /// Conjugate transpose.
    pub fn dagger(&self) -> Matrix<R> {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).dagger())
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.is_square() && *self == self.dagger()
    }
}

impl<R: Ring> Matrix<R> {
    pub fn neg(&self) -> Matrix<R> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(R::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<R>) -> Result<Matrix<R>, MatError> {
        self.add(&other.neg())
    }

    /// Entrywise difference.
    ///
    /// # Panics
    /// On a dimension mismatch.
    pub fn minus(&self, other: &Matrix<R>) -> Matrix<R> {
        self.plus(&other.neg())
    }

    /// `scalar * self`, with the scalar on the left of every entry.
    pub fn scale(&self, scalar: &R) -> Matrix<R> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| scalar.times(a)).collect(),
        }
    }
}

impl<R: Rig> fmt::Display for Matrix<R> {
    /// `[[a, b], [c, d]]`; rows are listed top to bottom.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (c, a) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::rig::{FreeIsometry, Gaussian, Gf2};

    type Q = Matrix<BigRational>;

    fn q(rows: &[&[&str]]) -> Q {
        Q::parse_rows(rows).unwrap()
    }

    #[test]
    fn compose_is_diagram_order() {
        let f = q(&[&["1", "2"]]); // 2 -> 1
        let g = q(&[&["3"], &["4"]]); // 1 -> 2
        assert_eq!(f.then(&g), q(&[&["3", "6"], &["4", "8"]]));
        assert_eq!(g.then(&f), q(&[&["11"]]));
        assert!(f.compose(&f).is_err());
    }

    #[test]
    fn inverse_pair() {
        let a = q(&[&["1", "1"], &["0", "1"]]);
        let b = q(&[&["1", "-1"], &["0", "1"]]);
        assert!(a.then(&b).is_identity());
    }

    #[test]
    fn gf2_row_then_dagger() {
        let f = Matrix::<Gf2>::parse_rows(&[&["1", "1", "1"]]).unwrap();
        assert_eq!(f.dagger().then(&f), Matrix::identity(1));
    }

    #[test]
    fn free_isometry_generator_is_isometry() {
        let x = Matrix::<FreeIsometry>::parse_rows(&[&["x"]]).unwrap();
        assert!(x.then(&x.dagger()).is_identity());
        assert!(!x.dagger().then(&x).is_identity());
    }

    #[test]
    fn gaussian_dagger() {
        let m = Matrix::<Gaussian>::parse_rows(&[&["i"]]).unwrap();
        assert_eq!(m.dagger(), Matrix::parse_rows(&[&["-i"]]).unwrap());
    }

    #[test]
    fn blocks_round_trip() {
        let f = q(&[&["0", "1", "0"], &["1", "1", "0"], &["0", "0", "1"]]);
        let p = BlockPartition::new(vec![1, 2]);
        let b = |i, j| f.block(&p, &p, i, j).unwrap();
        assert_eq!(b(0, 0), q(&[&["0"]]));
        assert_eq!(b(0, 1), q(&[&["1", "0"]]));
        assert_eq!(b(1, 0), q(&[&["1"], &["0"]]));
        assert!(b(1, 1).is_identity());
        let blocks = vec![vec![b(0, 0), b(0, 1)], vec![b(1, 0), b(1, 1)]];
        assert_eq!(Q::assemble(&blocks, &p, &p).unwrap(), f);
        assert!(f.block(&BlockPartition::new(vec![1, 1]), &p, 0, 0).is_err());
    }

    #[test]
    fn zero_object_units() {
        let id1 = Q::identity(1);
        assert_eq!(id1.oplus(&Q::zero(0, 0)), id1);
        let z = Q::zero(0, 3);
        assert_eq!(z.dagger().rows(), 3);
        assert_eq!(Q::zero(3, 0).then(&Q::zero(2, 3)), Q::zero(2, 0));
    }

    #[test]
    fn symmetries() {
        let s = Q::swap(1, 2);
        assert!(s.then(&Q::swap(2, 1)).is_identity());
        let p = BlockPartition::new(vec![1, 2]);
        assert_eq!(Q::symmetry(&p, 0, 1), s);
        assert_eq!(Q::swap(1, 1), q(&[&["0", "1"], &["1", "0"]]));
    }
}
