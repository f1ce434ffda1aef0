//! Exact integer matrices and their Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense `rows × cols` matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Panics when the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has {} entries, expected {cols}", r.len());
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, v.clone().into());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// `None` on a shape mismatch.
    pub fn mul(&self, other: &IntegerMatrix) -> Option<IntegerMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// `row[dst] += k · row[src]`.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(dst, j) + k * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// `col[dst] += k · col[src]`.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, dst) + k * self.get(i, src);
            self.set(i, dst, v);
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Isomorphism type `⊕ ℤ/d_i ⊕ ℤ^rank` of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    /// Invariant factors, each at least 2, with `torsion[i] | torsion[i + 1]`.
    pub torsion: Vec<BigInt>,
    pub rank: usize,
}

impl Fingerprint {
    pub fn free(rank: usize) -> Self {
        Fingerprint { torsion: Vec::new(), rank }
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.torsion.iter().map(|d| d.to_string()).collect();
        write!(f, "rank={} torsion=[{}]", self.rank, t.join(","))
    }
}

/// Smallest nonzero `|a_ij|` with `i, j ≥ t`, first in row-major order.
fn pivot(m: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m.get(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Diagonal of the Smith normal form, nonnegative and with the divisibility chain.
pub fn smith_diagonal(input: &IntegerMatrix) -> Vec<BigInt> {
    let mut m = input.clone();
    let steps = m.rows.min(m.cols);
    let mut diag = Vec::with_capacity(steps);
    for t in 0..steps {
        loop {
            let Some((pi, pj)) = pivot(&m, t) else {
                return diag;
            };
            m.swap_rows(t, pi);
            m.swap_cols(t, pj);
            let p = m.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..m.rows {
                let q = m.get(i, t).div_floor(&p);
                m.add_row_multiple(i, t, &-q);
                clean &= m.get(i, t).is_zero();
            }
            for j in t + 1..m.cols {
                let q = m.get(t, j).div_floor(&p);
                m.add_col_multiple(j, t, &-q);
                clean &= m.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..m.rows).find(|&i| (t + 1..m.cols).any(|j| !m.get(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => m.add_row_multiple(t, i, &BigInt::one()),
                None => break,
            }
        }
        diag.push(m.get(t, t).abs());
    }
    diag
}

/// Cokernel `ℤ^cols / rowspace(m)` of the matrix.
pub fn smith_normal_form(m: &IntegerMatrix) -> Fingerprint {
    let diag = smith_diagonal(m);
    let torsion: Vec<BigInt> = diag.iter().filter(|d| !d.is_one()).cloned().collect();
    Fingerprint { torsion, rank: m.cols - diag.len() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn fp(torsion: &[i64], rank: usize) -> Fingerprint {
        Fingerprint { torsion: torsion.iter().map(|&d| big(d)).collect(), rank }
    }

    fn det(m: &[Vec<BigInt>]) -> BigInt {
        if m.is_empty() {
            return BigInt::one();
        }
        let mut acc = BigInt::zero();
        for (j, a) in m[0].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = a * det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        if n < k {
            return Vec::new();
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    /// Invariant factors as ratios of gcds of `k × k` minors.
    fn determinantal_oracle(m: &IntegerMatrix) -> Fingerprint {
        let mut prev = BigInt::one();
        let mut torsion = Vec::new();
        let mut nonzero = 0;
        for k in 1..=m.rows().min(m.cols()) {
            let mut g = BigInt::zero();
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let sub: Vec<Vec<BigInt>> =
                        rs.iter().map(|&i| cs.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
                    g = g.gcd(&det(&sub));
                }
            }
            if g.is_zero() {
                break;
            }
            let d = &g / &prev;
            if !d.is_one() {
                torsion.push(d);
            }
            nonzero = k;
            prev = g;
        }
        Fingerprint { torsion, rank: m.cols() - nonzero }
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, big(rng.gen_range(-bound..=bound)));
            }
        }
        m
    }

    #[test]
    fn examples() {
        assert_eq!(smith_normal_form(&IntegerMatrix::from_rows(2, &[vec![2, 0], vec![0, 0]])), fp(&[2], 1));
        assert_eq!(smith_normal_form(&IntegerMatrix::from_rows(2, &[vec![2, 4], vec![6, 8]])), fp(&[2, 4], 0));
        assert_eq!(smith_normal_form(&IntegerMatrix::zeros(0, 3)), fp(&[], 3));
        for k in 2..=6 {
            for n in 1..=5 {
                let m = IntegerMatrix::from_rows(n, &[vec![k; n]]);
                assert_eq!(smith_normal_form(&m), fp(&[k], n - 1));
            }
        }
        assert_eq!(smith_normal_form(&IntegerMatrix::from_rows(1, &[vec![1]])), fp(&[], 0));
    }

    #[test]
    fn divisibility_chain_from_coprime_diagonal() {
        let m = IntegerMatrix::from_rows(3, &[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]);
        assert_eq!(smith_normal_form(&m), fp(&[2, 2, 60], 0));
    }

    #[test]
    fn agrees_with_determinantal_divisors() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            let bound = rng.gen_range(1..=9);
            let m = random_matrix(&mut rng, rows, cols, bound);
            assert_eq!(smith_normal_form(&m), determinantal_oracle(&m), "{m}");
        }
    }

    #[test]
    fn large_entries_stay_exact() {
        let p = BigInt::parse_bytes(b"340282366920938463463374607431768211507", 10).unwrap();
        let m = IntegerMatrix::from_rows(2, &[vec![p.clone(), BigInt::zero()], vec![BigInt::zero(), &p * &p]]);
        assert_eq!(smith_normal_form(&m).torsion, vec![p.clone(), &p * &p]);
    }

    proptest! {
        #[test]
        fn invariant_under_unimodular_operations(seed in any::<u64>(), rows in 1usize..5, cols in 1usize..5) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&mut rng, rows, cols, 12);
            let base = smith_normal_form(&m);
            for d in base.torsion.windows(2) {
                prop_assert!(d[1].is_multiple_of(&d[0]));
            }
            prop_assert!(base.torsion.iter().all(|d| *d >= big(2)));
            let mut w = m.clone();
            for _ in 0..12 {
                match rng.gen_range(0..6) {
                    0 => w.swap_rows(rng.gen_range(0..rows), rng.gen_range(0..rows)),
                    1 => w.swap_cols(rng.gen_range(0..cols), rng.gen_range(0..cols)),
                    2 => w.negate_row(rng.gen_range(0..rows)),
                    3 => w.negate_col(rng.gen_range(0..cols)),
                    4 if rows > 1 => {
                        let a = rng.gen_range(0..rows);
                        let b = (a + rng.gen_range(1..rows)) % rows;
                        w.add_row_multiple(a, b, &big(rng.gen_range(-3..=3)));
                    }
                    5 if cols > 1 => {
                        let a = rng.gen_range(0..cols);
                        let b = (a + rng.gen_range(1..cols)) % cols;
                        w.add_col_multiple(a, b, &big(rng.gen_range(-3..=3)));
                    }
                    _ => {}
                }
            }
            prop_assert_eq!(smith_normal_form(&w), base);
        }

        #[test]
        fn transpose_shares_torsion(seed in any::<u64>(), rows in 1usize..5, cols in 1usize..5) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&mut rng, rows, cols, 12);
            prop_assert_eq!(smith_normal_form(&m).torsion, smith_normal_form(&m.transpose()).torsion);
        }
    }
}
