//! Smith normal form over the integers with checked 128-bit arithmetic.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i128>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i128>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[i128]>::to_vec).collect()
    }

    pub fn column(&self, c: usize) -> Vec<i128> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let v = checked_add(out.get(i, j), checked_mul(a, b)?)?;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[i128]) -> Result<Vec<i128>> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).try_fold(0i128, |acc, j| {
                    let a = self.get(i, j);
                    if a == 0 || v[j] == 0 {
                        Ok(acc)
                    } else {
                        checked_add(acc, checked_mul(a, v[j])?)
                    }
                })
            })
            .collect()
    }

    /// Columns of `self` followed by the columns of `other`.
    pub fn hconcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: i128) -> Result<()> {
        if factor == 0 {
            return Ok(());
        }
        for c in 0..self.cols {
            let s = self.get(source, c);
            if s != 0 {
                let v = checked_add(self.get(target, c), checked_mul(factor, s)?)?;
                self.set(target, c, v);
            }
        }
        Ok(())
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, factor: i128) -> Result<()> {
        if factor == 0 {
            return Ok(());
        }
        for r in 0..self.rows {
            let s = self.get(r, source);
            if s != 0 {
                let v = checked_add(self.get(r, target), checked_mul(factor, s)?)?;
                self.set(r, target, v);
            }
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = self.get(r, c);
            self.set(r, c, -v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = self.get(r, c);
            self.set(r, c, -v);
        }
    }
}

fn checked_add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Which unimodular transforms to track alongside the diagonalization.
#[derive(Clone, Copy, Debug, Default)]
pub struct Track {
    pub left: bool,
    pub right: bool,
}

/// `U · M · V = D` with `D` diagonal, positive invariant factors `d_1 | d_2 | …`
/// in the leading `rank` diagonal entries. Transforms not requested are `None`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub invariants: Vec<i128>,
    pub rank: usize,
    pub u: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
}

struct Work {
    m: IntMatrix,
    u: Option<(IntMatrix, IntMatrix)>,
    v: Option<(IntMatrix, IntMatrix)>,
}

impl Work {
    /// row_t += f · row_s
    fn row_add(&mut self, t: usize, s: usize, f: i128) -> Result<()> {
        self.m.add_row_multiple(t, s, f)?;
        if let Some((u, u_inv)) = &mut self.u {
            u.add_row_multiple(t, s, f)?;
            u_inv.add_col_multiple(s, t, -f)?;
        }
        Ok(())
    }

    /// col_t += f · col_s
    fn col_add(&mut self, t: usize, s: usize, f: i128) -> Result<()> {
        self.m.add_col_multiple(t, s, f)?;
        if let Some((v, v_inv)) = &mut self.v {
            v.add_col_multiple(t, s, f)?;
            v_inv.add_row_multiple(s, t, -f)?;
        }
        Ok(())
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        self.m.swap_rows(a, b);
        if let Some((u, u_inv)) = &mut self.u {
            u.swap_rows(a, b);
            u_inv.swap_cols(a, b);
        }
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.m.swap_cols(a, b);
        if let Some((v, v_inv)) = &mut self.v {
            v.swap_cols(a, b);
            v_inv.swap_rows(a, b);
        }
    }

    fn row_negate(&mut self, r: usize) {
        self.m.negate_row(r);
        if let Some((u, u_inv)) = &mut self.u {
            u.negate_row(r);
            u_inv.negate_col(r);
        }
    }
}

pub fn smith_normal_form(m: &IntMatrix, track: Track) -> Result<Snf> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        m: m.clone(),
        u: track.left.then(|| (IntMatrix::identity(rows), IntMatrix::identity(rows))),
        v: track.right.then(|| (IntMatrix::identity(cols), IntMatrix::identity(cols))),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the trailing block becomes the pivot.
        let Some((pr, pc)) = min_nonzero(&w.m, t) else { break };
        w.row_swap(t, pr);
        w.col_swap(t, pc);
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                let x = w.m.get(r, t);
                if x != 0 {
                    let q = x.div_euclid(w.m.get(t, t));
                    w.row_add(r, t, -q)?;
                    if w.m.get(r, t) != 0 {
                        dirty = true;
                    }
                }
            }
            for c in t + 1..cols {
                let x = w.m.get(t, c);
                if x != 0 {
                    let q = x.div_euclid(w.m.get(t, t));
                    w.col_add(c, t, -q)?;
                    if w.m.get(t, c) != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // A remainder is smaller than the pivot; move it into place.
                let (pr, pc) = min_nonzero_cross(&w.m, t);
                w.row_swap(t, pr);
                w.col_swap(t, pc);
                continue;
            }
            let p = w.m.get(t, t);
            let offender = (t + 1..rows).find_map(|r| (t + 1..cols).find(|&c| w.m.get(r, c) % p != 0).map(|_| r));
            match offender {
                Some(r) => w.row_add(t, r, 1)?,
                None => break,
            }
        }
        if w.m.get(t, t) < 0 {
            w.row_negate(t);
        }
        t += 1;
    }
    let rank = t;
    let invariants = (0..rank).map(|i| w.m.get(i, i)).collect();
    let (u, u_inv) = w.u.map_or((None, None), |(a, b)| (Some(a), Some(b)));
    let (v, v_inv) = w.v.map_or((None, None), |(a, b)| (Some(a), Some(b)));
    Ok(Snf { invariants, rank, u, u_inv, v, v_inv })
}

fn min_nonzero(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i128, usize, usize)> = None;
    for r in t..m.rows() {
        for c in t..m.cols() {
            let a = m.get(r, c).abs();
            if a != 0 && best.is_none_or(|(b, _, _)| a < b) {
                best = Some((a, r, c));
                if a == 1 {
                    return Some((r, c));
                }
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// Smallest nonzero entry in row `t` or column `t` of the trailing block.
fn min_nonzero_cross(m: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (m.get(t, t).abs(), t, t);
    for r in t + 1..m.rows() {
        let a = m.get(r, t).abs();
        if a != 0 && (best.0 == 0 || a < best.0) {
            best = (a, r, t);
        }
    }
    for c in t + 1..m.cols() {
        let a = m.get(t, c).abs();
        if a != 0 && (best.0 == 0 || a < best.0) {
            best = (a, t, c);
        }
    }
    (best.1, best.2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn diag_of(snf: &Snf, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(rows, cols);
        for (i, &x) in snf.invariants.iter().enumerate() {
            d.set(i, i, x);
        }
        d
    }

    fn all() -> Track {
        Track { left: true, right: true }
    }

    #[test]
    fn examples() {
        let id = smith_normal_form(&IntMatrix::identity(3), Track::default()).unwrap();
        assert_eq!(id.invariants, vec![1, 1, 1]);
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&m, Track::default()).unwrap().invariants, vec![1, 6]);
        let z = smith_normal_form(&IntMatrix::zeros(3, 4), Track::default()).unwrap();
        assert!(z.invariants.is_empty());
        let m = IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(smith_normal_form(&m, Track::default()).unwrap().invariants, vec![2, 6, 12]);
    }

    #[test]
    fn empty_shapes() {
        let s = smith_normal_form(&IntMatrix::zeros(0, 3), all()).unwrap();
        assert_eq!(s.rank, 0);
        assert_eq!(s.v.unwrap().rows(), 3);
    }

    fn det(m: &IntMatrix) -> i128 {
        // Laplace expansion; test matrices are at most 5×5.
        let n = m.rows();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|c| {
                let minor = IntMatrix::from_rows(
                    (1..n).map(|r| (0..n).filter(|&j| j != c).map(|j| m.get(r, j)).collect()).collect(),
                );
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m.get(0, c) * det(&minor)
            })
            .sum()
    }

    proptest! {
        #[test]
        fn reconstructs_and_divides(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-6i128..7, 25)) {
            let m = IntMatrix::from_rows((0..rows).map(|r| (0..cols).map(|c| seed[r * 5 + c]).collect()).collect());
            let snf = smith_normal_form(&m, all()).unwrap();
            let (u, v) = (snf.u.clone().unwrap(), snf.v.clone().unwrap());
            let d = u.mul(&m).unwrap().mul(&v).unwrap();
            prop_assert_eq!(d, diag_of(&snf, rows, cols));
            for w in snf.invariants.windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
            prop_assert!(snf.invariants.iter().all(|&x| x > 0));
            prop_assert_eq!(u.mul(snf.u_inv.as_ref().unwrap()).unwrap(), IntMatrix::identity(rows));
            prop_assert_eq!(v.mul(snf.v_inv.as_ref().unwrap()).unwrap(), IntMatrix::identity(cols));
            prop_assert_eq!(det(&u).abs(), 1);
            prop_assert_eq!(det(&v).abs(), 1);
        }
    }
}
