//! Dense bit-packed linear algebra over GF(2).
//!
//! Everything downstream (check matrices, boundary maps, symplectic forms,
//! fault spaces) reduces to rank / kernel / solve / membership questions over
//! GF(2), so this module is the workhorse. Rows are packed into `u64` words;
//! at desk scale this is faster and simpler than a sparse layout even for
//! low-density inputs.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A fixed-length vector over GF(2), bit-packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Vector {
    len: usize,
    words: Vec<u64>,
}

impl GF2Vector {
    pub fn zeros(len: usize) -> Self {
        GF2Vector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            assert!(i < len, "support index {i} out of range for length {len}");
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let (w, b) = (i / 64, i % 64);
        if value {
            self.words[w] |= 1 << b;
        } else {
            self.words[w] &= !(1 << b);
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place XOR with another vector of the same length.
    pub fn xor_assign(&mut self, other: &GF2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Parity of the overlap `<self, other>` (the GF(2) dot product).
    pub fn dot(&self, other: &GF2Vector) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Number of positions where both vectors hold 1.
    pub fn overlap(&self, other: &GF2Vector) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn and(&self, other: &GF2Vector) -> GF2Vector {
        debug_assert_eq!(self.len, other.len);
        GF2Vector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn or(&self, other: &GF2Vector) -> GF2Vector {
        debug_assert_eq!(self.len, other.len);
        GF2Vector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Sorted positions holding 1.
    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Restriction to the given (sorted or unsorted) column set.
    pub fn select(&self, cols: &[usize]) -> GF2Vector {
        let mut out = GF2Vector::zeros(cols.len());
        for (j, &c) in cols.iter().enumerate() {
            if self.get(c) {
                out.set(j, true);
            }
        }
        out
    }

    /// Embed into a longer vector, placing bit `j` at `cols[j]`.
    pub fn scatter(&self, len: usize, cols: &[usize]) -> GF2Vector {
        let mut out = GF2Vector::zeros(len);
        for j in self.iter_ones() {
            out.set(cols[j], true);
        }
        out
    }
}

impl fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// A binary matrix stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: Vec<GF2Vector>,
    cols: usize,
}

impl GF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GF2Matrix {
            rows: vec![GF2Vector::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<GF2Vector>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols);
        }
        GF2Matrix { rows, cols }
    }

    /// Build from (row, col) entry positions.
    pub fn from_entries(rows: usize, cols: usize, entries: &[(usize, usize)]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for &(r, c) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of bounds");
            m.rows[r].set(c, true);
        }
        m
    }

    /// Build from per-row dense 0/1 slices (test convenience).
    pub fn from_dense(data: &[&[u8]]) -> Self {
        let cols = data.first().map_or(0, |r| r.len());
        let rows = data
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols);
                GF2Vector::from_bools(&r.iter().map(|&b| b != 0).collect::<Vec<_>>())
            })
            .collect();
        GF2Matrix { rows, cols }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &GF2Vector {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[GF2Vector] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.rows[r].set(c, v);
    }

    pub fn push_row(&mut self, row: GF2Vector) {
        assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut t = GF2Matrix::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                t.rows[c].set(r, true);
            }
        }
        t
    }

    /// Matrix-vector product `m ยท x`.
    pub fn mul_vec(&self, x: &GF2Vector) -> GF2Vector {
        assert_eq!(x.len(), self.cols);
        let mut out = GF2Vector::zeros(self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            if row.dot(x) {
                out.set(r, true);
            }
        }
        out
    }

    /// Restriction to a column subset, preserving row order.
    pub fn select_cols(&self, cols: &[usize]) -> GF2Matrix {
        GF2Matrix {
            rows: self.rows.iter().map(|r| r.select(cols)).collect(),
            cols: cols.len(),
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> GF2Matrix {
        GF2Matrix {
            rows: rows.iter().map(|&r| self.rows[r].clone()).collect(),
            cols: self.cols,
        }
    }

    pub fn max_row_weight(&self) -> usize {
        self.rows.iter().map(|r| r.weight()).max().unwrap_or(0)
    }

    pub fn max_col_weight(&self) -> usize {
        let mut counts = vec![0usize; self.cols];
        for row in &self.rows {
            for c in row.iter_ones() {
                counts[c] += 1;
            }
        }
        counts.into_iter().max().unwrap_or(0)
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF2Matrix {}x{}", self.rows.len(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Result of row reduction: the reduced matrix, its pivot columns in
/// strictly increasing order, and the rank.
pub struct Rref {
    pub matrix: GF2Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form with deterministic pivoting (lowest row index
/// holding a 1 in the current column wins).
pub fn rref(m: &GF2Matrix) -> Rref {
    let mut mat = m.clone();
    let (nrows, ncols) = (mat.num_rows(), mat.num_cols());
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..nrows).find(|&r| mat.rows[r].get(col)) else {
            continue;
        };
        mat.rows.swap(rank, pivot_row);
        let pivot = mat.rows[rank].clone();
        for (r, row) in mat.rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Rref {
        matrix: mat,
        pivots,
        rank,
    }
}

pub fn rank(m: &GF2Matrix) -> usize {
    rref(m).rank
}

/// Basis rows for `{x : m x = 0}`. Row count is `cols - rank`.
pub fn kernel(m: &GF2Matrix) -> GF2Matrix {
    let red = rref(m);
    let ncols = m.num_cols();
    let mut is_pivot = vec![false; ncols];
    let mut pivot_of_col = vec![usize::MAX; ncols];
    for (i, &c) in red.pivots.iter().enumerate() {
        is_pivot[c] = true;
        pivot_of_col[c] = i;
    }
    let mut basis = Vec::with_capacity(ncols - red.rank);
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = GF2Vector::zeros(ncols);
        v.set(free, true);
        for &pc in &red.pivots {
            if red.matrix.rows[pivot_of_col[pc]].get(free) {
                v.set(pc, true);
            }
        }
        debug_assert!(m.mul_vec(&v).is_zero());
        basis.push(v);
    }
    GF2Matrix::from_rows(basis, ncols)
}

/// Solve `m x = b`. Returns `Ok(None)` when `b` is outside the column space.
pub fn solve(m: &GF2Matrix, b: &GF2Vector) -> Result<Option<GF2Vector>, Gf2Error> {
    if b.len() != m.num_rows() {
        return Err(Gf2Error::DimensionMismatch {
            expected: m.num_rows(),
            got: b.len(),
        });
    }
    // Reduce the augmented matrix [m | b].
    let ncols = m.num_cols();
    let mut aug = GF2Matrix::zeros(m.num_rows(), ncols + 1);
    for (r, row) in m.rows().iter().enumerate() {
        for c in row.iter_ones() {
            aug.rows[r].set(c, true);
        }
        if b.get(r) {
            aug.rows[r].set(ncols, true);
        }
    }
    let red = rref(&aug);
    if red.pivots.contains(&ncols) {
        return Ok(None);
    }
    let mut x = GF2Vector::zeros(ncols);
    for (i, &c) in red.pivots.iter().enumerate() {
        if red.matrix.rows[i].get(ncols) {
            x.set(c, true);
        }
    }
    debug_assert_eq!(&m.mul_vec(&x), b);
    Ok(Some(x))
}

/// Membership of `v` in the row space of `m`. On success also returns the
/// row-combination indices that reproduce `v`.
pub fn row_space_member(m: &GF2Matrix, v: &GF2Vector) -> Result<Option<Vec<usize>>, Gf2Error> {
    if v.len() != m.num_cols() {
        return Err(Gf2Error::DimensionMismatch {
            expected: m.num_cols(),
            got: v.len(),
        });
    }
    let combo = solve(&m.transpose(), v)?;
    Ok(combo.map(|c| c.support()))
}

/// Stack two matrices with the same column count, `top` rows first.
pub fn vstack(top: &GF2Matrix, bottom: &GF2Matrix) -> GF2Matrix {
    assert_eq!(top.num_cols(), bottom.num_cols());
    let mut rows = top.rows().to_vec();
    rows.extend_from_slice(bottom.rows());
    GF2Matrix::from_rows(rows, top.num_cols())
}

/// Place `left` and `right` side by side.
pub fn hstack(left: &GF2Matrix, right: &GF2Matrix) -> GF2Matrix {
    assert_eq!(left.num_rows(), right.num_rows());
    let cols = left.num_cols() + right.num_cols();
    let rows = left
        .rows()
        .iter()
        .zip(right.rows())
        .map(|(l, r)| {
            let mut v = GF2Vector::zeros(cols);
            for c in l.iter_ones() {
                v.set(c, true);
            }
            for c in r.iter_ones() {
                v.set(left.num_cols() + c, true);
            }
            v
        })
        .collect();
    GF2Matrix::from_rows(rows, cols)
}

/// Kronecker product `a โŠ— b`.
pub fn kron(a: &GF2Matrix, b: &GF2Matrix) -> GF2Matrix {
    let mut out = GF2Matrix::zeros(a.num_rows() * b.num_rows(), a.num_cols() * b.num_cols());
    for (ra, row_a) in a.rows().iter().enumerate() {
        for ca in row_a.iter_ones() {
            for (rb, row_b) in b.rows().iter().enumerate() {
                for cb in row_b.iter_ones() {
                    out.set(ra * b.num_rows() + rb, ca * b.num_cols() + cb, true);
                }
            }
        }
    }
    out
}

/// Text format: first line `rows cols`, then one line per nonzero row,
/// `row: col col ...`. Round-trips bit-exactly.
pub fn to_text(m: &GF2Matrix) -> String {
    let mut out = format!("{} {}\n", m.num_rows(), m.num_cols());
    for (r, row) in m.rows().iter().enumerate() {
        if row.is_zero() {
            continue;
        }
        let cols: Vec<String> = row.iter_ones().map(|c| c.to_string()).collect();
        out.push_str(&format!("{}: {}\n", r, cols.join(" ")));
    }
    out
}

pub fn from_text(text: &str) -> Result<GF2Matrix, Gf2Error> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Gf2Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let mut parts = header.split_whitespace();
    let parse_dim = |s: Option<&str>, line: usize| -> Result<usize, Gf2Error> {
        s.ok_or(Gf2Error::Parse {
            line,
            msg: "expected `rows cols` header".into(),
        })?
        .parse()
        .map_err(|e| Gf2Error::Parse {
            line,
            msg: format!("bad dimension: {e}"),
        })
    };
    let nrows = parse_dim(parts.next(), 1)?;
    let ncols = parse_dim(parts.next(), 1)?;
    let mut m = GF2Matrix::zeros(nrows, ncols);
    for (ln, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (row_s, cols_s) = line.split_once(':').ok_or(Gf2Error::Parse {
            line: ln + 1,
            msg: "expected `row: col col ...`".into(),
        })?;
        let r: usize = row_s.trim().parse().map_err(|e| Gf2Error::Parse {
            line: ln + 1,
            msg: format!("bad row index: {e}"),
        })?;
        if r >= nrows {
            return Err(Gf2Error::Parse {
                line: ln + 1,
                msg: format!("row index {r} out of range ({nrows} rows)"),
            });
        }
        for col_s in cols_s.split_whitespace() {
            let c: usize = col_s.parse().map_err(|e| Gf2Error::Parse {
                line: ln + 1,
                msg: format!("bad column index: {e}"),
            })?;
            if c >= ncols {
                return Err(Gf2Error::Parse {
                    line: ln + 1,
                    msg: format!("column index {c} out of range ({ncols} cols)"),
                });
            }
            m.set(r, c, true);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn shor_hx() -> GF2Matrix {
        GF2Matrix::from_dense(&[
            &[1, 1, 1, 1, 1, 1, 0, 0, 0],
            &[0, 0, 0, 1, 1, 1, 1, 1, 1],
        ])
    }

    #[test]
    fn rref_identity() {
        let m = GF2Matrix::identity(3);
        let red = rref(&m);
        assert_eq!(red.matrix, GF2Matrix::identity(3));
        assert_eq!(red.pivots, vec![0, 1, 2]);
        assert_eq!(red.rank, 3);
    }

    #[test]
    fn rref_zero_matrix() {
        let red = rref(&GF2Matrix::zeros(2, 4));
        assert_eq!(red.matrix, GF2Matrix::zeros(2, 4));
        assert!(red.pivots.is_empty());
        assert_eq!(red.rank, 0);
    }

    #[test]
    fn rref_punctured_repetition_restriction() {
        // 3 rows / 2 cols of the punctured repetition check matrix.
        let m = GF2Matrix::from_dense(&[&[1, 0], &[1, 1], &[0, 1]]);
        assert_eq!(rref(&m).rank, 2);
    }

    #[test]
    fn kernel_identity_is_empty() {
        assert_eq!(kernel(&GF2Matrix::identity(3)).num_rows(), 0);
    }

    #[test]
    fn kernel_parity() {
        let m = GF2Matrix::from_dense(&[&[1, 1]]);
        let k = kernel(&m);
        assert_eq!(k.num_rows(), 1);
        assert_eq!(k.row(0).support(), vec![0, 1]);
    }

    #[test]
    fn kernel_shor_hx_dimension() {
        // Oracle: enumerate all 2^9 vectors and count the annihilated ones.
        let hx = shor_hx();
        let mut count = 0usize;
        for bits in 0u32..1 << 9 {
            let v = GF2Vector::from_bools(&(0..9).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>());
            if hx.mul_vec(&v).is_zero() {
                count += 1;
            }
        }
        assert_eq!(count, 1 << 7);
        let k = kernel(&hx);
        assert_eq!(k.num_rows(), 7);
        for row in k.rows() {
            assert!(hx.mul_vec(row).is_zero());
        }
    }

    #[test]
    fn solve_identity() {
        let m = GF2Matrix::identity(2);
        let b = GF2Vector::from_support(2, &[0]);
        let x = solve(&m, &b).unwrap().unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn solve_parity_row() {
        let m = GF2Matrix::from_dense(&[&[1, 1]]);
        let b = GF2Vector::from_support(1, &[0]);
        let x = solve(&m, &b).unwrap().unwrap();
        assert_eq!(x.weight() % 2, 1);
        assert_eq!(m.mul_vec(&x), b);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let m = GF2Matrix::identity(2);
        let b = GF2Vector::zeros(3);
        assert!(matches!(
            solve(&m, &b),
            Err(Gf2Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn row_space_member_rows_and_zero() {
        let m = GF2Matrix::from_dense(&[&[1, 1, 0], &[0, 1, 1]]);
        for r in 0..2 {
            let combo = row_space_member(&m, m.row(r)).unwrap().unwrap();
            assert_eq!(combo, vec![r]);
        }
        let combo = row_space_member(&m, &GF2Vector::zeros(3)).unwrap().unwrap();
        assert!(combo.is_empty());
    }

    #[test]
    fn row_space_member_matches_exhaustive_span() {
        // Rank-deficient matrix; oracle enumerates all row combinations.
        let m = GF2Matrix::from_dense(&[&[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 1, 1, 1]]);
        let mut span = std::collections::HashSet::new();
        for mask in 0u8..8 {
            let mut v = GF2Vector::zeros(4);
            for r in 0..3 {
                if mask >> r & 1 == 1 {
                    v.xor_assign(m.row(r));
                }
            }
            span.insert(v);
        }
        for bits in 0u8..16 {
            let v = GF2Vector::from_bools(&(0..4).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>());
            let member = row_space_member(&m, &v).unwrap();
            assert_eq!(member.is_some(), span.contains(&v), "vector {v:?}");
            if let Some(combo) = member {
                let mut rebuilt = GF2Vector::zeros(4);
                for r in combo {
                    rebuilt.xor_assign(m.row(r));
                }
                assert_eq!(rebuilt, v);
            }
        }
    }

    #[test]
    fn solve_random_in_column_space() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let mut m = GF2Matrix::zeros(6, 8);
            for r in 0..6 {
                for c in 0..8 {
                    m.set(r, c, rng.gen_bool(0.5));
                }
            }
            let x0 = GF2Vector::from_bools(&(0..8).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
            let b = m.mul_vec(&x0);
            let x = solve(&m, &b).unwrap().expect("b constructed in column space");
            assert_eq!(m.mul_vec(&x), b);
        }
    }

    #[test]
    fn text_format_round_trip() {
        let m = shor_hx();
        let text = to_text(&m);
        let back = from_text(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(to_text(&back), text);
    }

    #[test]
    fn text_format_rejects_bad_input() {
        assert!(from_text("").is_err());
        assert!(from_text("2 2\n5: 0\n").is_err());
        assert!(from_text("2 2\n0: 7\n").is_err());
    }

    proptest! {
        #[test]
        fn rank_nullity(seed in 0u64..200, nrows in 1usize..7, ncols in 1usize..9) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut m = GF2Matrix::zeros(nrows, ncols);
            for r in 0..nrows {
                for c in 0..ncols {
                    m.set(r, c, rng.gen_bool(0.4));
                }
            }
            let k = kernel(&m);
            prop_assert_eq!(k.num_rows() + rank(&m), ncols);
            for row in k.rows() {
                prop_assert!(m.mul_vec(row).is_zero());
            }
        }

        #[test]
        fn rref_is_idempotent(seed in 0u64..200) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut m = GF2Matrix::zeros(5, 7);
            for r in 0..5 {
                for c in 0..7 {
                    m.set(r, c, rng.gen_bool(0.4));
                }
            }
            let r1 = rref(&m);
            let r2 = rref(&r1.matrix);
            prop_assert_eq!(&r2.matrix, &r1.matrix);
            prop_assert_eq!(r2.rank, r1.rank);
        }

        #[test]
        fn membership_agrees_with_solve(seed in 0u64..100) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut m = GF2Matrix::zeros(4, 6);
            for r in 0..4 {
                for c in 0..6 {
                    m.set(r, c, rng.gen_bool(0.4));
                }
            }
            let v = GF2Vector::from_bools(&(0..6).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>());
            let member = row_space_member(&m, &v).unwrap().is_some();
            let solved = solve(&m.transpose(), &v).unwrap().is_some();
            prop_assert_eq!(member, solved);
        }
    }
}
