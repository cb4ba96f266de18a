//! Sparse elimination on unit pivots.
//!
//! Pivoting on a unit `u` at `(r, c)` replaces the matrix by its Schur
//! complement with row `r` and column `c` removed; the invariant factors
//! lose exactly one `1`. Over a field every nonzero entry is a unit, so the
//! process computes the rank. Over `ℤ` it stops when no unit is left and
//! hands the residual to dense Smith normal form.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::ring::Arith;

pub(crate) type Row<T> = Vec<(u32, T)>;

/// Result of unit elimination.
pub(crate) struct Reduced<T> {
    /// Number of unit pivots taken.
    pub units: usize,
    /// Remaining nonzero rows, columns renumbered densely.
    pub residual: Vec<Row<T>>,
    pub residual_cols: usize,
}

#[derive(Debug)]
pub(crate) struct Overflow;

/// Eliminates `rows` (each sorted by column, no zeros) over `a`.
pub(crate) fn eliminate<A: Arith>(
    a: &A,
    mut rows: Vec<Row<A::T>>,
    ncols: usize,
) -> Result<Reduced<A::T>, Overflow> {
    let mut alive = vec![true; rows.len()];
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    let mut col_count = vec![0u32; ncols];
    for (i, row) in rows.iter().enumerate() {
        for &(j, _) in row {
            col_rows[j as usize].push(i as u32);
            col_count[j as usize] += 1;
        }
    }
    let mut done = vec![false; ncols];
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> = (0..ncols as u32)
        .filter(|&j| col_count[j as usize] > 0)
        .map(|j| Reverse((col_count[j as usize], j)))
        .collect();
    let mut units = 0;

    while let Some(Reverse((count, c))) = heap.pop() {
        let cu = c as usize;
        if done[cu] || col_count[cu] == 0 {
            continue;
        }
        if count != col_count[cu] {
            heap.push(Reverse((col_count[cu], c)));
            continue;
        }
        let mut list = std::mem::take(&mut col_rows[cu]);
        list.sort_unstable();
        list.dedup();
        list.retain(|&i| alive[i as usize] && entry(&rows[i as usize], c).is_some());
        debug_assert_eq!(list.len(), col_count[cu] as usize);

        let pivot = list
            .iter()
            .copied()
            .filter(|&i| a.is_unit(entry(&rows[i as usize], c).unwrap()))
            .min_by_key(|&i| rows[i as usize].len());
        let Some(r) = pivot else {
            // No unit here now; the column is re-queued whenever it changes.
            col_rows[cu] = list;
            continue;
        };

        let prow = std::mem::take(&mut rows[r as usize]);
        alive[r as usize] = false;
        let u = entry(&prow, c).unwrap().clone();
        for &i in list.iter().filter(|&&i| i != r) {
            let row = &mut rows[i as usize];
            let x = entry(row, c).unwrap();
            let f = a.cancel(x, &u).ok_or(Overflow)?;
            let merged = axpy(a, row, &f, &prow, i, &mut col_count, &mut col_rows)?;
            *row = merged;
        }
        for &(j, _) in &prow {
            let ju = j as usize;
            if j != c {
                col_count[ju] -= 1;
                if col_count[ju] > 0 {
                    heap.push(Reverse((col_count[ju], j)));
                }
            }
        }
        done[cu] = true;
        col_count[cu] = 0;
        col_rows[cu] = Vec::new();
        units += 1;
    }

    let mut renumber = vec![u32::MAX; ncols];
    let mut residual_cols = 0;
    for j in 0..ncols {
        if col_count[j] > 0 {
            renumber[j] = residual_cols;
            residual_cols += 1;
        }
    }
    let residual = rows
        .into_iter()
        .zip(alive)
        .filter(|(row, alive)| *alive && !row.is_empty())
        .map(|(row, _)| {
            row.into_iter()
                .map(|(j, v)| (renumber[j as usize], v))
                .collect()
        })
        .collect();
    Ok(Reduced {
        units,
        residual,
        residual_cols: residual_cols as usize,
    })
}

fn entry<T>(row: &[(u32, T)], c: u32) -> Option<&T> {
    row.binary_search_by_key(&c, |e| e.0)
        .ok()
        .map(|k| &row[k].1)
}

/// `row + f·prow`, dropping zeros and keeping column bookkeeping exact for
/// every column of `prow`.
fn axpy<A: Arith>(
    a: &A,
    row: &[(u32, A::T)],
    f: &A::T,
    prow: &[(u32, A::T)],
    row_id: u32,
    col_count: &mut [u32],
    col_rows: &mut [Vec<u32>],
) -> Result<Row<A::T>, Overflow> {
    let mut out = Vec::with_capacity(row.len() + prow.len());
    let (mut i, mut k) = (0, 0);
    while i < row.len() || k < prow.len() {
        let left = row.get(i).map(|e| e.0);
        let right = prow.get(k).map(|e| e.0);
        match (left, right) {
            (Some(l), Some(r)) if l == r => {
                let v = a.fma(&row[i].1, f, &prow[k].1).ok_or(Overflow)?;
                if a.is_zero(&v) {
                    col_count[l as usize] -= 1;
                } else {
                    out.push((l, v));
                }
                i += 1;
                k += 1;
            }
            (Some(l), r) if r.is_none_or(|r| l < r) => {
                out.push(row[i].clone());
                i += 1;
            }
            (_, Some(r)) => {
                let v = a.mul(f, &prow[k].1).ok_or(Overflow)?;
                debug_assert!(!a.is_zero(&v));
                col_count[r as usize] += 1;
                col_rows[r as usize].push(row_id);
                out.push((r, v));
                k += 1;
            }
            (_, None) => unreachable!(),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::ring::{Int64, ModP};
    use super::*;

    fn sparse(dense: &[&[i64]]) -> Vec<Row<i64>> {
        dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(j, &v)| (j as u32, v))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn units_then_residual() {
        let m = sparse(&[&[1, 2, 0], &[3, 4, 0], &[0, 0, 6]]);
        let r = eliminate(&Int64, m, 3).unwrap();
        assert_eq!(r.units, 1);
        // Schur complement of [[1,2],[3,4]] on the unit is [−2]; plus the 6
        let mut vals: Vec<i64> = r
            .residual
            .iter()
            .flat_map(|row| row.iter().map(|e| e.1))
            .collect();
        vals.sort();
        assert_eq!(vals, vec![-2, 6]);
        assert_eq!(r.residual_cols, 2);
    }

    #[test]
    fn mod_p_rank() {
        let m: Vec<Row<u32>> = sparse(&[&[2, 4], &[6, 8]])
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|(j, v)| (j, ModP::new(2).lift(v)))
                    .filter(|e| e.1 != 0)
                    .collect()
            })
            .collect();
        let r = eliminate(&ModP::new(2), m, 2).unwrap();
        assert_eq!(r.units, 0);
        let f3 = ModP::new(3);
        let m3: Vec<Row<u32>> = vec![vec![(0, 2), (1, 1)], vec![(0, 0), (1, 2)]]
            .into_iter()
            .map(|r: Vec<(u32, u32)>| r.into_iter().filter(|e| e.1 != 0).collect())
            .collect();
        assert_eq!(eliminate(&f3, m3, 2).unwrap().units, 2);
    }

    #[test]
    fn cancellation_drops_entries() {
        let m = sparse(&[&[1, 1], &[1, 1]]);
        let r = eliminate(&Int64, m, 2).unwrap();
        assert_eq!(r.units, 1);
        assert!(r.residual.is_empty());
    }
}
