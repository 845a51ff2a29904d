//! Exact dense linear algebra over a coefficient field: reduced row echelon
//! form, rank, kernel bases, linear solves and span intersection.
//!
//! Matrices are dense and row-major. Every instance in this crate is well
//! under 100x100 on the path side, so there is no sparse machinery. Pivots
//! are chosen deterministically: the first nonzero entry scanning rows top
//! to bottom within the leftmost unfinished column.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        ExactMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols));
        ExactMatrix {
            field,
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors of length `ambient`.
    pub fn from_columns(field: F, ambient: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = ExactMatrix::zero(field, ambient, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), ambient);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = ExactMatrix::zero(field.clone(), n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: F::Elem) {
        self.data[r * self.cols + c] = value;
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    /// Tab-separated dump, one row per line, for debugging.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }

    /// Appends the columns of `other` to the right.
    pub fn hstack(&self, other: &ExactMatrix<F>) -> ExactMatrix<F> {
        assert_eq!(self.rows, other.rows);
        let mut m = ExactMatrix::zero(self.field.clone(), self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        m
    }

    pub fn matmul(&self, other: &ExactMatrix<F>) -> ExactMatrix<F> {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut m = ExactMatrix::zero(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let sum = f.add(m.get(i, j), &f.mul(a, b));
                    m.set(i, j, sum);
                }
            }
        }
        m
    }

    pub fn apply(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(x.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (j, xj) in x.iter().enumerate() {
                    if !f.is_zero(xj) && !f.is_zero(self.get(i, j)) {
                        acc = f.add(&acc, &f.mul(self.get(i, j), xj));
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns in
    /// increasing order.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !f.is_zero(self.get(r, col))) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let inv = f.inv(self.get(pivot_row, col)).expect("pivot is nonzero");
            self.scale_row(pivot_row, &inv);
            for r in 0..self.rows {
                if r != pivot_row && !f.is_zero(self.get(r, col)) {
                    let factor = self.get(r, col).clone();
                    self.row_sub_scaled(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &F::Elem) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let v = f.mul(self.get(r, c), factor);
            self.set(r, c, v);
        }
    }

    // row r -= factor * row src
    fn row_sub_scaled(&mut self, r: usize, src: usize, factor: &F::Elem) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let v = f.sub(self.get(r, c), &f.mul(self.get(src, c), factor));
            self.set(r, c, v);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{x : self * x = 0}` in the standard
    /// reduced-echelon parametrization: one vector per free column, carrying
    /// a one in that coordinate, ordered by free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field.clone();
        let mut reduced = self.clone();
        let pivots = reduced.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut x = vec![f.zero(); self.cols];
            x[free] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = f.neg(reduced.get(row, free));
            }
            basis.push(x);
        }
        // rank-nullity, and exactness of every kernel vector
        debug_assert_eq!(pivots.len() + basis.len(), self.cols);
        debug_assert!(basis
            .iter()
            .all(|x| self.apply(x).iter().all(|v| f.is_zero(v))));
        basis
    }

    /// Solves `self * X = rhs` where the columns of `self` are linearly
    /// independent. Fails with `NotInSpan` when some column of `rhs` is not
    /// a combination of the columns of `self`.
    pub fn solve_columns(&self, rhs: &ExactMatrix<F>) -> Result<ExactMatrix<F>> {
        assert_eq!(self.rows, rhs.rows);
        let mut aug = self.hstack(rhs);
        let pivots = aug.rref();
        for &p in &pivots {
            if p >= self.cols {
                return Err(Error::NotInSpan { level: 0 });
            }
        }
        if pivots.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: pivots.len(),
            });
        }
        let mut x = ExactMatrix::zero(self.field.clone(), self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, aug.get(row, self.cols + j).clone());
            }
        }
        Ok(x)
    }
}

/// Rank of the span of a vector list.
pub fn span_rank<F: Field>(field: &F, ambient: usize, vectors: &[Vec<F::Elem>]) -> usize {
    ExactMatrix::from_columns(field.clone(), ambient, vectors).rank()
}

/// Whether span(a) and span(b) coincide, by three rank computations.
pub fn spans_equal<F: Field>(
    field: &F,
    ambient: usize,
    a: &[Vec<F::Elem>],
    b: &[Vec<F::Elem>],
) -> bool {
    let ma = ExactMatrix::from_columns(field.clone(), ambient, a);
    let mb = ExactMatrix::from_columns(field.clone(), ambient, b);
    let ra = ma.rank();
    let rb = mb.rank();
    ra == rb && ma.hstack(&mb).rank() == ra
}

/// Basis of `span(a) ∩ span(b)`, via the kernel of the stacked block system
/// `[A | -B]`. The result is echelon-reduced, hence deterministic.
pub fn intersect_spans<F: Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[Vec<F::Elem>],
) -> Result<Vec<Vec<F::Elem>>> {
    let ambient = match a.first().or_else(|| b.first()) {
        Some(v) => v.len(),
        None => return Ok(Vec::new()),
    };
    for v in a.iter().chain(b.iter()) {
        if v.len() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
    }
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let ma = ExactMatrix::from_columns(field.clone(), ambient, a);
    let negated: Vec<Vec<F::Elem>> = b
        .iter()
        .map(|v| v.iter().map(|x| field.neg(x)).collect())
        .collect();
    let mb = ExactMatrix::from_columns(field.clone(), ambient, &negated);
    let kernel = ma.hstack(&mb).kernel_basis();
    // Each kernel vector (x, y) satisfies A x = B y, a member of the
    // intersection; their span is the whole intersection.
    let members: Vec<Vec<F::Elem>> = kernel.iter().map(|xy| ma.apply(&xy[..a.len()])).collect();
    let mut echelon = ExactMatrix::from_rows(field.clone(), members);
    echelon.rref();
    let basis: Vec<Vec<F::Elem>> = (0..echelon.rows())
        .map(|r| (0..ambient).map(|c| echelon.get(r, c).clone()).collect())
        .filter(|row: &Vec<F::Elem>| row.iter().any(|x| !field.is_zero(x)))
        .collect();
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num::rational::BigRational;
    use proptest::prelude::*;

    fn qmat(rows: Vec<Vec<i64>>) -> ExactMatrix<Rationals> {
        let f = Rationals;
        ExactMatrix::from_rows(
            f,
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| f.from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(qmat(vec![vec![1, 0], vec![0, 1]]).rank(), 2);
        assert_eq!(qmat(vec![vec![2, 4], vec![1, 2]]).rank(), 1);
        let f2 = PrimeField::new(2);
        let m = ExactMatrix::from_rows(f2, vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let zero = ExactMatrix::zero(Rationals, 2, 3);
        let basis = zero.kernel_basis();
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x == Rationals.one(), i == j);
            }
        }

        let f2 = PrimeField::new(2);
        let m = ExactMatrix::from_rows(f2, vec![vec![1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);

        let m = qmat(vec![vec![1, 2, 3]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        assert_eq!(
            basis[0],
            vec![
                Rationals.from_int(-2),
                Rationals.from_int(1),
                Rationals.from_int(0)
            ]
        );
        assert_eq!(
            basis[1],
            vec![
                Rationals.from_int(-3),
                Rationals.from_int(0),
                Rationals.from_int(1)
            ]
        );
        for v in &basis {
            assert!(m.apply(v).iter().all(|x| Rationals.is_zero(x)));
        }
    }

    #[test]
    fn intersect_span_examples() {
        let f = Rationals;
        let e = |i: usize| -> Vec<BigRational> {
            (0..3).map(|j| f.from_int((i == j) as i64)).collect()
        };
        let basis = intersect_spans(&f, &[e(0)], &[e(0)]).unwrap();
        assert_eq!(basis, vec![e(0)]);
        assert!(intersect_spans(&f, &[e(0)], &[e(1)]).unwrap().is_empty());
        let basis = intersect_spans(&f, &[e(0), e(1)], &[e(1), e(2)]).unwrap();
        assert_eq!(basis, vec![e(1)]);
        let err = intersect_spans(&f, &[e(0)], &[vec![f.one()]]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn tsv_dump() {
        let m = qmat(vec![vec![1, -2], vec![0, 3]]);
        assert_eq!(m.to_tsv(), "1\t-2\n0\t3\n");
    }

    #[test]
    fn solve_columns_round_trip() {
        let c = qmat(vec![vec![1, 0], vec![1, 1], vec![0, 2]]);
        let x = qmat(vec![vec![3], vec![-1]]);
        let rhs = c.matmul(&x);
        let solved = c.solve_columns(&rhs).unwrap();
        for i in 0..2 {
            assert_eq!(solved.get(i, 0), x.get(i, 0));
        }
        // A vector outside the span fails.
        let outside = qmat(vec![vec![1], vec![0], vec![0]]);
        assert!(matches!(
            c.solve_columns(&outside),
            Err(Error::NotInSpan { .. })
        ));
    }

    // Fraction-free (Bareiss) elimination over the integers: an independent
    // rank oracle, which also exposes a nonzero r x r minor of the input.
    fn bareiss_rank_and_minor(rows: &[Vec<i64>]) -> (usize, num::BigInt) {
        use num::BigInt;
        let mut m: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let nrows = m.len();
        let ncols = m.first().map_or(0, Vec::len);
        let mut prev = BigInt::from(1);
        let mut rank = 0;
        let mut col = 0;
        while rank < nrows && col < ncols {
            let Some(src) = (rank..nrows).find(|&r| m[r][col] != BigInt::from(0)) else {
                col += 1;
                continue;
            };
            m.swap(rank, src);
            for r in rank + 1..nrows {
                for c in col + 1..ncols {
                    let val = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                    m[r][c] = val;
                }
                m[r][col] = BigInt::from(0);
            }
            prev = m[rank][col].clone();
            rank += 1;
            col += 1;
        }
        (rank, prev)
    }

    proptest! {
        #[test]
        fn rank_matches_fraction_free_oracle(
            rows in proptest::collection::vec(
                proptest::collection::vec(-4i64..=4, 1..=5), 1..=5)
        ) {
            let ncols = rows[0].len();
            let rows: Vec<Vec<i64>> = rows
                .into_iter()
                .map(|mut r| { r.resize(ncols, 0); r })
                .collect();
            let (oracle_rank, minor) = bareiss_rank_and_minor(&rows);
            let m = qmat(rows.clone());
            prop_assert_eq!(m.rank(), oracle_rank);

            // GF(p) rank can only drop, and only when p divides the pivot
            // minor exposed by the fraction-free elimination.
            for p in [2u32, 3, 5] {
                let fp = PrimeField::new(p);
                let mp = ExactMatrix::from_rows(
                    fp,
                    rows.iter()
                        .map(|r| r.iter().map(|&x| fp.from_int(x)).collect())
                        .collect(),
                );
                let rp = mp.rank();
                prop_assert!(rp <= oracle_rank);
                if oracle_rank > 0
                    && !num::Integer::is_multiple_of(&minor, &num::BigInt::from(p))
                {
                    prop_assert_eq!(rp, oracle_rank);
                }
            }
        }

        #[test]
        fn kernel_vectors_reduced_mod_p_stay_in_kernel(
            rows in proptest::collection::vec(
                proptest::collection::vec(-3i64..=3, 1..=4), 1..=4)
        ) {
            let ncols = rows[0].len();
            let rows: Vec<Vec<i64>> = rows
                .into_iter()
                .map(|mut r| { r.resize(ncols, 0); r })
                .collect();
            let m = qmat(rows.clone());
            for p in [3u32, 5] {
                let fp = PrimeField::new(p);
                let mp = ExactMatrix::from_rows(
                    fp,
                    rows.iter()
                        .map(|r| r.iter().map(|&x| fp.from_int(x)).collect())
                        .collect(),
                );
                for v in m.kernel_basis() {
                    // Clear denominators, then reduce; the image must lie in
                    // the GF(p) kernel because the exact product is zero.
                    let lcm = v.iter().fold(num::BigInt::from(1), |acc, x| {
                        num::Integer::lcm(&acc, x.denom())
                    });
                    let ints: Vec<u64> = v
                        .iter()
                        .map(|x| fp.from_bigint(&(x.numer() * &lcm / x.denom())))
                        .collect();
                    prop_assert!(mp.apply(&ints).iter().all(|r| fp.is_zero(r)));
                }
            }
        }

        #[test]
        fn intersection_contained_in_both_spans(
            a in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 1..=3),
            b in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 1..=3),
        ) {
            let f = Rationals;
            let to_q = |vs: &Vec<Vec<i64>>| -> Vec<Vec<BigRational>> {
                vs.iter()
                    .map(|v| v.iter().map(|&x| f.from_int(x)).collect())
                    .collect()
            };
            let (aq, bq) = (to_q(&a), to_q(&b));
            let meet = intersect_spans(&f, &aq, &bq).unwrap();
            for side in [&aq, &bq] {
                let m = ExactMatrix::from_columns(f, 4, side);
                let r = m.rank();
                for v in &meet {
                    let aug = m.hstack(&ExactMatrix::from_columns(f, 4, std::slice::from_ref(v)));
                    prop_assert_eq!(aug.rank(), r);
                }
            }
            // Dimension from the rank formula on the stacked system.
            let ra = span_rank(&f, 4, &aq);
            let rb = span_rank(&f, 4, &bq);
            let all: Vec<Vec<BigRational>> =
                aq.iter().chain(bq.iter()).cloned().collect();
            let rab = span_rank(&f, 4, &all);
            prop_assert_eq!(meet.len(), ra + rb - rab);
        }
    }
}
