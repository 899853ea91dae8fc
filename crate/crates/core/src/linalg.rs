//! Exact linear algebra over Gaussian rationals.

use std::collections::BTreeMap;

use crate::scalars::{ExactComplex, Scalar, Tolerance};

pub type SparseVec<K> = BTreeMap<K, ExactComplex>;

/// Fully reduced row echelon form of a span of sparse vectors.
///
/// The pivot of a row is its largest key, its pivot coefficient is 1, and no
/// pivot key occurs in any other row. This form is unique for a given span,
/// so two `Echelon`s are equal exactly when their spans are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<K: Ord> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in descending pivot order.
    pub fn rows(&self) -> impl Iterator<Item = (&K, &SparseVec<K>)> {
        self.rows.iter().rev()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Remainder of `v` after eliminating every pivot key.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out = v.clone();
        // rows carry no foreign pivot keys, so one pass suffices
        let hits: Vec<K> = v.keys().filter(|k| self.rows.contains_key(k)).cloned().collect();
        for k in hits {
            let Some(c) = out.get(&k).cloned() else { continue };
            axpy(&mut out, &(-&c), &self.rows[&k]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        for c in r.values_mut() {
            *c = &*c * &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &(-&c), &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn extend<'a>(&mut self, vs: impl IntoIterator<Item = &'a SparseVec<K>>)
    where
        K: 'a,
    {
        for v in vs {
            self.insert(v);
        }
    }

    /// Whether the span of `self` contains the span of `other`.
    pub fn contains_span(&self, other: &Echelon<K>) -> bool {
        other.rows.values().all(|r| self.contains(r))
    }
}

/// `y += a * x`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &ExactComplex, x: &SparseVec<K>) {
    if a.is_zero() {
        return;
    }
    for (k, xv) in x {
        let e = y.entry(k.clone()).or_default();
        *e += &(a * xv);
        if e.is_zero() {
            y.remove(k);
        }
    }
}

/// Basis of the right kernel `{x : A x = 0}` of a dense exact matrix with
/// `ncols` columns.
pub fn kernel(rows: &[Vec<ExactComplex>], ncols: usize) -> Vec<Vec<ExactComplex>> {
    let mut a: Vec<Vec<ExactComplex>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][col].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![ExactComplex::zero(); ncols];
        v[free] = ExactComplex::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[row][free];
        }
        basis.push(v);
    }
    basis
}

/// Rank of a dense matrix over any scalar domain; pivots below the tolerance
/// count as zero in approximate mode.
pub fn rank<C: Scalar>(rows: &[Vec<C>], tol: Tolerance) -> usize {
    let mut a: Vec<Vec<C>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        if r == a.len() {
            break;
        }
        // largest pivot in approximate mode, first nonzero in exact mode
        let candidate = (r..a.len()).filter(|&i| !a[i][col].near_zero(tol)).max_by(|&i, &j| {
            let (x, y) = (a[i][col].to_approx().norm(), a[j][col].to_approx().norm());
            if C::EXACT {
                j.cmp(&i)
            } else {
                x.partial_cmp(&y).unwrap_or(std::cmp::Ordering::Equal)
            }
        });
        let Some(p) = candidate else { continue };
        a.swap(r, p);
        let inv = a[r][col].inv();
        let pivot_row: Vec<C> = a[r].iter().map(|x| x.mul_ref(&inv)).collect();
        for row in a.iter_mut().skip(r + 1) {
            let f = row[col].clone();
            if f.near_zero(tol) {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - f.mul_ref(p);
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn e(v: i64) -> ExactComplex {
        ExactComplex::from_int(v)
    }

    fn sv(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, c)| (k, e(c))).collect()
    }

    #[test]
    fn echelon_is_canonical() {
        let mut a = Echelon::new();
        a.insert(&sv(&[(3, 1), (1, 2)]));
        a.insert(&sv(&[(3, 2), (2, 1)]));
        let mut b = Echelon::new();
        b.insert(&sv(&[(2, 1), (1, -4)]));
        b.insert(&sv(&[(3, 1), (1, 2)]));
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
        assert!(a.contains(&sv(&[(3, 3), (2, 1), (1, 2)])));
        assert!(!a.contains(&sv(&[(1, 1)])));
        assert!(!a.insert(&sv(&[(3, 1), (1, 2)])));
    }

    #[test]
    fn kernel_of_small_matrix() {
        // x + y + z = 0, y - z = 0
        let rows = vec![vec![e(1), e(1), e(1)], vec![e(0), e(1), e(-1)]];
        let k = kernel(&rows, 3);
        assert_eq!(k, vec![vec![e(-2), e(1), e(1)]]);
        assert_eq!(kernel(&[], 2).len(), 2);
    }

    #[test]
    fn rank_exact_and_approx() {
        let rows = vec![vec![e(1), e(2)], vec![e(2), e(4)]];
        assert_eq!(rank(&rows, Tolerance::default()), 1);
        let rows = vec![
            vec![Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
            vec![Complex64::new(2.0, 0.0), Complex64::new(4.0 + 1e-12, 0.0)],
        ];
        assert_eq!(rank(&rows, Tolerance::default()), 1);
    }
}
