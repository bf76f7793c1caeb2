//! Integer matrix algebra for the torus simplicity criterion.
//!
//! The angle matrix theta is nondegenerate iff the only `x` in `Z^n` with
//! `theta^T x` in `Z^n` is `x = 0`. [`nondegeneracy_check`] decides this by
//! splitting theta into its rational part `B/q` and per-symbol coefficient
//! matrices, then solving the resulting integer-linear conditions with a
//! Smith normal form.

use std::cmp::min;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::phase::{Phase, PhaseMatrix};
use crate::{Error, Result};

/// Dense integer matrix with unbounded entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix("dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        IntMatrix::new(rows, cols, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = IntMatrix::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows).expect("valid dims");
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &x[j]).sum())
            .collect())
    }

    /// Exact determinant via the fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::InvalidMatrix("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.entries.clone();
        let at = |m: &Vec<BigInt>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if at(&m, k, k).is_zero() {
                let swap = ((k + 1)..n).find(|&i| !at(&m, i, k).is_zero());
                match swap {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j);
                    m[i * n + j] = num / &prev;
                }
            }
            prev = at(&m, k, k);
        }
        Ok(sign * at(&m, n - 1, n - 1))
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols
            && self
                .determinant()
                .map(|d| d.abs().is_one())
                .unwrap_or(false)
    }

    /// True when all off-diagonal entries vanish.
    pub fn is_rect_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let add = c * self.get(src, j);
            let cur = self.get(dst, j) + add;
            self.set(dst, j, cur);
        }
    }

    /// col[dst] += c * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let add = c * self.get(i, src);
            let cur = self.get(i, dst) + add;
            self.set(i, dst, cur);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

impl fmt::Display for IntMatrix {
    /// JSON array-of-arrays form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Unimodular `U`, `V` and rectangular-diagonal `D` with `U * A * V = D`,
/// nonnegative diagonal, and each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Re-checks every postcondition against the original input.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let product = match self.u.mul(a).and_then(|ua| ua.mul(&self.v)) {
            Ok(p) => p,
            Err(_) => return false,
        };
        if product != self.d {
            return false;
        }
        if !self.u.is_unimodular() || !self.v.is_unimodular() {
            return false;
        }
        if !self.d.is_rect_diagonal() {
            return false;
        }
        let k = min(self.d.rows(), self.d.cols());
        for t in 0..k {
            if self.d.get(t, t).is_negative() {
                return false;
            }
            if t + 1 < k {
                let cur = self.d.get(t, t);
                let next = self.d.get(t + 1, t + 1);
                if cur.is_zero() {
                    if !next.is_zero() {
                        return false;
                    }
                } else if !next.is_multiple_of(cur) {
                    return false;
                }
            }
        }
        true
    }

    /// Diagonal entries `d_1, ..., d_min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..min(self.d.rows(), self.d.cols()))
            .map(|t| self.d.get(t, t).clone())
            .collect()
    }
}

/// Smith normal form with smallest-nonzero-absolute-value pivoting.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows).expect("identity");
    let mut v = IntMatrix::identity(cols).expect("identity");

    let find_pivot = |d: &IntMatrix, t: usize| -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let val = d.get(i, j);
                if val.is_zero() {
                    continue;
                }
                match &best {
                    Some((bi, bj)) if d.get(*bi, *bj).abs() <= val.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    };

    let mut t = 0;
    'diag: while t < min(rows, cols) {
        loop {
            let Some((pi, pj)) = find_pivot(&d, t) else {
                break 'diag; // remaining submatrix is zero
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut residue = false;
            for i in (t + 1)..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t) / d.get(t, t);
                if !q.is_zero() {
                    let neg_q = -q;
                    d.row_axpy(i, t, &neg_q);
                    u.row_axpy(i, t, &neg_q);
                }
                if !d.get(i, t).is_zero() {
                    residue = true;
                }
            }
            for j in (t + 1)..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j) / d.get(t, t);
                if !q.is_zero() {
                    let neg_q = -q;
                    d.col_axpy(j, t, &neg_q);
                    v.col_axpy(j, t, &neg_q);
                }
                if !d.get(t, j).is_zero() {
                    residue = true;
                }
            }
            if residue {
                continue; // a smaller pivot appeared; re-select
            }

            // Row and column t are clear. Pull in any entry the pivot does
            // not divide so the divisibility chain holds.
            let nondivisible = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !d.get(i, j).is_multiple_of(d.get(t, t)));
            match nondivisible {
                Some((i, _)) => {
                    let one = BigInt::one();
                    d.row_axpy(t, i, &one);
                    u.row_axpy(t, i, &one);
                }
                None => break,
            }
        }
        t += 1;
    }

    for k in 0..min(rows, cols) {
        if d.get(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }

    SmithDecomposition { u, d, v }
}

/// Basis of the integer kernel `{x : A x = 0}`, as columns of the SNF's `V`
/// at indices with zero diagonal entry. Empty when the kernel is trivial.
pub fn integer_kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let k = min(a.rows(), a.cols());
    (0..a.cols())
        .filter(|&idx| idx >= k || snf.d.get(idx, idx).is_zero())
        .map(|idx| snf.v.column(idx))
        .collect()
}

/// Outcome of the nondegeneracy decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nondegeneracy {
    Nondegenerate,
    Degenerate { witness: Vec<BigInt> },
}

/// Exact check that `theta^T x` is an integer vector: for every column `j`
/// the phase `sum_i x_i * theta_ij` must reduce to zero, symbol part
/// included.
pub fn is_degeneracy_witness(theta: &PhaseMatrix, x: &[BigInt]) -> bool {
    let n = theta.n();
    if x.len() != n || x.iter().all(Zero::is_zero) {
        return false;
    }
    (0..n).all(|j| {
        let mut acc = Phase::zero();
        for (i, xi) in x.iter().enumerate() {
            acc = acc.add(&theta.entry(i, j).scale_big(xi));
        }
        acc.is_zero()
    })
}

/// The phase `<x, theta y> = sum_ij x_i theta_ij y_j`.
pub fn pairing_phase(theta: &PhaseMatrix, x: &[BigInt], y: &[BigInt]) -> Phase {
    let n = theta.n();
    assert_eq!(x.len(), n);
    assert_eq!(y.len(), n);
    let mut acc = Phase::zero();
    for i in 0..n {
        for j in 0..n {
            acc = acc.add(&theta.entry(i, j).scale_big(&(&x[i] * &y[j])));
        }
    }
    acc
}

/// Decides whether theta is nondegenerate.
///
/// Split theta into its rational part `B/q` and symbol coefficient matrices
/// `S_t`. Under the genericity convention, a witness must lie in the integer
/// kernel of every `S_t^T` and satisfy `B^T x = 0 (mod q)`. Any nonzero
/// solution is minimized by exhaustive search over the cube of the SNF
/// solution's infinity norm (bounded fallback beyond 10^6 candidates).
pub fn nondegeneracy_check(theta: &PhaseMatrix) -> Nondegeneracy {
    let n = theta.n();
    let symbols = theta.symbol_names();

    // Integer kernel common to all transposed symbol matrices.
    let kernel: Vec<Vec<BigInt>> = if symbols.is_empty() {
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|i| if i == k { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect()
    } else {
        let mut rows: Vec<BigInt> = Vec::new();
        for name in &symbols {
            // lcm of coefficient denominators clears S_t to an integer matrix
            let mut scale = BigInt::one();
            for i in 0..n {
                for j in 0..n {
                    scale = scale.lcm(theta.entry(i, j).symbol_coeff(name).denom());
                }
            }
            let scale_rat = BigRational::from_integer(scale);
            for j in 0..n {
                for i in 0..n {
                    let scaled = theta.entry(i, j).symbol_coeff(name) * &scale_rat;
                    debug_assert!(scaled.denom().is_one());
                    rows.push(scaled.to_integer());
                }
            }
        }
        let stacked = IntMatrix::new(symbols.len() * n, n, rows).expect("stacked symbol matrix");
        integer_kernel_basis(&stacked)
    };

    if kernel.is_empty() {
        return Nondegeneracy::Nondegenerate;
    }
    let r = kernel.len();

    // Rational side: B^T x = 0 (mod q) restricted to the kernel.
    let q = theta.common_denominator();
    let q_rat = BigRational::from_integer(q.clone());
    let mut b_entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let scaled = theta.entry(i, j).rational_part() * &q_rat;
            debug_assert!(scaled.denom().is_one());
            b_entries.push(scaled.to_integer());
        }
    }
    let b = IntMatrix::new(n, n, b_entries).expect("rational part matrix");

    let mut k_entries = Vec::with_capacity(n * r);
    for i in 0..n {
        for col in &kernel {
            k_entries.push(col[i].clone());
        }
    }
    let k_mat = IntMatrix::new(n, r, k_entries).expect("kernel matrix");

    let c = b.transpose().mul(&k_mat).expect("shapes agree");
    let snf = smith_normal_form(&c);
    let diag = snf.diagonal();

    // One candidate per free/diagonal index; keep the smallest by inf-norm.
    let mut best: Option<Vec<BigInt>> = None;
    for k in 0..r {
        let w_val = match diag.get(k) {
            Some(dk) if !dk.is_zero() => &q / dk.gcd(&q),
            _ => BigInt::one(),
        };
        let y: Vec<BigInt> = snf.v.column(k).iter().map(|e| e * &w_val).collect();
        let x = k_mat.mul_vec(&y).expect("shapes agree");
        debug_assert!(is_degeneracy_witness(theta, &x));
        let norm = inf_norm(&x);
        let better = match &best {
            Some(current) => norm < inf_norm(current),
            None => true,
        };
        if better {
            best = Some(x);
        }
    }
    let snf_witness = best.expect("kernel is nonempty");
    let witness = minimize_witness(theta, snf_witness);
    Nondegeneracy::Degenerate { witness }
}

fn inf_norm(x: &[BigInt]) -> BigInt {
    x.iter().map(|e| e.abs()).max().unwrap_or_else(BigInt::zero)
}

const MINIMIZE_CANDIDATE_CAP: u128 = 1_000_000;

/// Exhaustive minimization over the cube `|x|_inf <= bound` in shells of
/// ascending norm. Within a shell coordinates are scanned with the first
/// coordinate varying fastest and each coordinate running through
/// `0, 1, -1, 2, -2, ...`, so axis witnesses like `q*e_1` win ties.
fn minimize_witness(theta: &PhaseMatrix, snf_witness: Vec<BigInt>) -> Vec<BigInt> {
    let n = theta.n();
    let bound = match inf_norm(&snf_witness).to_u128() {
        Some(b) => b,
        None => return snf_witness,
    };
    if bound == 0 {
        return snf_witness;
    }
    let side = 2u128.saturating_mul(bound).saturating_add(1);
    let mut space = 1u128;
    for _ in 0..n {
        space = space.saturating_mul(side);
        if space > MINIMIZE_CANDIDATE_CAP {
            return snf_witness;
        }
    }

    let digit = |idx: u64| -> i64 {
        if idx == 0 {
            0
        } else if idx % 2 == 1 {
            ((idx + 1) / 2) as i64
        } else {
            -((idx / 2) as i64)
        }
    };

    for shell in 1..=bound {
        let radix = 2 * shell as u64 + 1;
        let mut idx = vec![0u64; n];
        loop {
            let x: Vec<i64> = idx.iter().map(|&i| digit(i)).collect();
            let norm = x.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
            if norm == shell as u64 {
                let big: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
                if is_degeneracy_witness(theta, &big) {
                    return big;
                }
            }
            // odometer with the first coordinate fastest
            let mut pos = 0;
            loop {
                if pos == n {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < radix {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    snf_witness
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn ph(num: i64, den: i64) -> Phase {
        Phase::from_fraction(num, den)
    }

    #[test]
    fn snf_divisor_example() {
        // d1 = gcd of all entries, d1*d2 = |det|.
        let a = IntMatrix::from_i64(2, 2, &[2, 4, 6, 8]).unwrap();
        let gcd_all = [2i64, 4, 6, 8]
            .iter()
            .fold(BigInt::zero(), |acc, &x| acc.gcd(&BigInt::from(x)));
        let det = a.determinant().unwrap().abs();
        let snf = smith_normal_form(&a);
        assert!(snf.verify(&a));
        assert_eq!(snf.diagonal()[0], gcd_all);
        assert_eq!(&snf.diagonal()[0] * &snf.diagonal()[1], det);
        assert_eq!(snf.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn snf_identity_and_zero() {
        let id = IntMatrix::identity(3).unwrap();
        let snf = smith_normal_form(&id);
        assert!(snf.verify(&id));
        assert_eq!(snf.d, id);

        let zero = IntMatrix::from_i64(1, 1, &[0]).unwrap();
        let snf = smith_normal_form(&zero);
        assert!(snf.verify(&zero));
        assert!(snf.d.get(0, 0).is_zero());
    }

    #[test]
    fn snf_random_postconditions() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            let entries: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-9..=9)).collect();
            let a = IntMatrix::from_i64(rows, cols, &entries).unwrap();
            let snf = smith_normal_form(&a);
            assert!(snf.verify(&a), "postconditions for {a}");
        }
    }

    #[test]
    fn kernel_of_skew_symbol_matrix_is_trivial() {
        let a = IntMatrix::from_i64(2, 2, &[0, 1, -1, 0]).unwrap();
        assert!(integer_kernel_basis(&a).is_empty());
    }

    #[test]
    fn kernel_picks_up_zero_columns() {
        let a = IntMatrix::from_i64(2, 3, &[2, 0, 0, 0, 0, 0]).unwrap();
        let basis = integer_kernel_basis(&a);
        assert_eq!(basis.len(), 2);
        for x in &basis {
            let image = a.mul_vec(x).unwrap();
            assert!(image.iter().all(Zero::is_zero));
        }
    }

    fn theta_2x2(p: Phase) -> PhaseMatrix {
        PhaseMatrix::from_upper(2, &[(0, 1, p)]).unwrap()
    }

    #[test]
    fn half_turn_torus_is_degenerate_with_minimal_witness() {
        let theta = theta_2x2(ph(1, 2));
        // Exhaustive oracle over the cube |x|_inf <= 2: (2, 0) is valid and
        // no vector of smaller norm is.
        let mut by_norm: Vec<(u64, Vec<BigInt>)> = Vec::new();
        for x1 in -2i64..=2 {
            for x2 in -2i64..=2 {
                let x = vec![BigInt::from(x1), BigInt::from(x2)];
                if is_degeneracy_witness(&theta, &x) {
                    let norm = x1.unsigned_abs().max(x2.unsigned_abs());
                    by_norm.push((norm, x));
                }
            }
        }
        let min_norm = by_norm.iter().map(|(n, _)| *n).min().unwrap();
        assert_eq!(min_norm, 2);

        match nondegeneracy_check(&theta) {
            Nondegeneracy::Degenerate { witness } => {
                assert_eq!(witness, vec![BigInt::from(2), BigInt::zero()]);
            }
            other => panic!("expected degenerate, got {other:?}"),
        }
    }

    #[test]
    fn generic_symbol_torus_is_nondegenerate() {
        let theta = theta_2x2(Phase::symbol("t"));
        assert_eq!(nondegeneracy_check(&theta), Nondegeneracy::Nondegenerate);
    }

    #[test]
    fn zero_theta_is_degenerate_with_unit_witness() {
        let theta = PhaseMatrix::zero(2).unwrap();
        match nondegeneracy_check(&theta) {
            Nondegeneracy::Degenerate { witness } => {
                assert_eq!(witness, vec![BigInt::one(), BigInt::zero()]);
            }
            other => panic!("expected degenerate, got {other:?}"),
        }
    }

    #[test]
    fn mixed_symbol_kernel_witness() {
        // theta_12 = t, theta_13 = 1/3: x must kill the symbol part
        // (x in span of e3 does) and satisfy the mod-3 condition.
        let theta = PhaseMatrix::from_upper(
            3,
            &[(0, 1, Phase::symbol("t")), (0, 2, ph(1, 3))],
        )
        .unwrap();
        match nondegeneracy_check(&theta) {
            Nondegeneracy::Degenerate { witness } => {
                assert!(is_degeneracy_witness(&theta, &witness));
                assert_eq!(witness, vec![BigInt::zero(), BigInt::zero(), BigInt::from(1)]);
            }
            other => panic!("expected degenerate, got {other:?}"),
        }
    }

    #[test]
    fn rational_theta_is_always_degenerate() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..25 {
            let n = rng.gen_range(1..=4);
            let mut upper = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    let den = rng.gen_range(1..=12i64);
                    let num = rng.gen_range(0..den.max(1));
                    upper.push((i, j, ph(num, den)));
                }
            }
            let theta = PhaseMatrix::from_upper(n, &upper).unwrap();

            // q * e1 is always valid for rational theta
            let q = theta.common_denominator();
            let mut qe1 = vec![BigInt::zero(); n];
            qe1[0] = q;
            assert!(is_degeneracy_witness(&theta, &qe1));

            match nondegeneracy_check(&theta) {
                Nondegeneracy::Degenerate { witness } => {
                    assert!(is_degeneracy_witness(&theta, &witness));
                    for _ in 0..100 {
                        let y: Vec<BigInt> =
                            (0..n).map(|_| BigInt::from(rng.gen_range(-20..=20i64))).collect();
                        assert!(pairing_phase(&theta, &witness, &y).is_zero());
                    }
                }
                Nondegeneracy::Nondegenerate => panic!("rational theta cannot be nondegenerate"),
            }
        }
    }
}
