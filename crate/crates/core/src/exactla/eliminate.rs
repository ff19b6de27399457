//! Sparse fraction-free Gaussian elimination.
//!
//! Rows are sorted sparse vectors. Each step picks a pivot column according to a
//! [`PivotOrder`], then the shortest active row holding that column (ties broken by
//! row index), and clears the column from every other active row. Row updates of
//! one step are independent and run in parallel; their results are applied in row
//! order so the outcome never depends on scheduling.

use rayon::prelude::*;

use super::domain::{EliminationDomain, Row};

/// Rule for choosing the next pivot column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotOrder {
    /// Column with the fewest active nonzeros first (Markowitz-style); fastest for rank.
    Markowitz,
    /// Columns left to right; pivot rows end up supported on `[col, ncols)`.
    Ascending,
    /// Columns right to left; pivot rows end up supported on `[0, col]`.
    Descending,
}

#[derive(Debug, Clone)]
pub struct PivotRow<E> {
    pub col: usize,
    pub row: Row<E>,
}

/// Outcome of elimination: pivot rows in the order they were chosen.
#[derive(Debug, Clone)]
pub struct Reduced<E> {
    pub ncols: usize,
    pub pivots: Vec<PivotRow<E>>,
}

impl<E> Reduced<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for p in &self.pivots {
            is_pivot[p.col] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }
}

const PARALLEL_THRESHOLD: usize = 16;

struct Update<E> {
    row: Row<E>,
    fills: Vec<usize>,
    cancels: Vec<usize>,
}

fn value_at<E>(row: &Row<E>, col: usize) -> Option<&E> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|i| &row[i].1)
}

/// `r <- pc * r - rc * p`, where `pc`, `rc` are the entries of `p` and `r` at the
/// pivot column.
fn combine<D: EliminationDomain>(
    dom: &D,
    r: &Row<D::Elem>,
    p: &Row<D::Elem>,
    pc: &D::Elem,
    rc: &D::Elem,
) -> Update<D::Elem> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let mut fills = Vec::new();
    let mut cancels = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, dom.mul(pc, &r[i].1)));
            i += 1;
        } else if cj < ci {
            let v = dom.mul(rc, &p[j].1);
            out.push((cj, dom.neg(&v)));
            fills.push(cj);
            j += 1;
        } else {
            let v = dom.cross(pc, &r[i].1, rc, &p[j].1);
            if dom.is_zero(&v) {
                cancels.push(ci);
            } else {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    dom.normalize(&mut out);
    Update {
        row: out,
        fills,
        cancels,
    }
}

/// Reduce `rows` (each sorted by column, no explicit zeros) to echelon form.
pub fn eliminate<D: EliminationDomain>(
    dom: &D,
    rows: Vec<Row<D::Elem>>,
    ncols: usize,
    order: PivotOrder,
) -> Reduced<D::Elem> {
    let mut active: Vec<Option<Row<D::Elem>>> = rows
        .into_iter()
        .map(|mut r| {
            debug_assert!(r.windows(2).all(|w| w[0].0 < w[1].0));
            debug_assert!(r.iter().all(|(c, v)| *c < ncols && !dom.is_zero(v)));
            if r.is_empty() {
                None
            } else {
                dom.normalize(&mut r);
                Some(r)
            }
        })
        .collect();

    // col_rows may hold stale or duplicate row ids; col_count is exact.
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    let mut col_count = vec![0usize; ncols];
    for (i, r) in active.iter().enumerate() {
        if let Some(r) = r {
            for &(c, _) in r {
                col_rows[c].push(i);
                col_count[c] += 1;
            }
        }
    }

    let mut done = vec![false; ncols];
    let mut pivots = Vec::new();
    let mut cursor = 0usize;

    loop {
        let col = match order {
            PivotOrder::Markowitz => {
                let best = (0..ncols)
                    .filter(|&c| !done[c] && col_count[c] > 0)
                    .min_by_key(|&c| (col_count[c], c));
                match best {
                    Some(c) => c,
                    None => break,
                }
            }
            PivotOrder::Ascending => {
                if cursor == ncols {
                    break;
                }
                cursor += 1;
                cursor - 1
            }
            PivotOrder::Descending => {
                if cursor == ncols {
                    break;
                }
                cursor += 1;
                ncols - cursor
            }
        };
        done[col] = true;

        let mut candidates: Vec<usize> = std::mem::take(&mut col_rows[col])
            .into_iter()
            .filter(|&r| active[r].as_ref().is_some_and(|row| value_at(row, col).is_some()))
            .collect();
        candidates.sort_unstable();
        candidates.dedup();
        if candidates.is_empty() {
            continue;
        }

        let pivot_id = *candidates
            .iter()
            .min_by_key(|&&r| (active[r].as_ref().map_or(0, Vec::len), r))
            .expect("nonempty");
        let pivot = active[pivot_id].take().expect("candidate is active");
        for &(c, _) in &pivot {
            col_count[c] -= 1;
        }
        let pc = value_at(&pivot, col).expect("pivot holds column").clone();

        let taken: Vec<(usize, Row<D::Elem>)> = candidates
            .iter()
            .filter(|&&r| r != pivot_id)
            .map(|&r| (r, active[r].take().expect("candidate is active")))
            .collect();

        let work = |(r, row): &(usize, Row<D::Elem>)| {
            let rc = value_at(row, col).expect("candidate holds column");
            (*r, combine(dom, row, &pivot, &pc, rc))
        };
        let updates: Vec<(usize, Update<D::Elem>)> = if taken.len() >= PARALLEL_THRESHOLD {
            taken.par_iter().map(work).collect()
        } else {
            taken.iter().map(work).collect()
        };

        for (r, up) in updates {
            for c in up.fills {
                col_count[c] += 1;
                col_rows[c].push(r);
            }
            for c in up.cancels {
                col_count[c] -= 1;
            }
            if !up.row.is_empty() {
                active[r] = Some(up.row);
            }
        }

        pivots.push(PivotRow { col, row: pivot });
    }

    Reduced { ncols, pivots }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::domain::{Integers, PrimeField};
    use num_bigint::BigInt;

    fn int_rows(rows: &[&[i64]]) -> Vec<Row<BigInt>> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(|(c, v)| (c, BigInt::from(*v)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn ranks_agree_across_pivot_orders() {
        let rows: &[&[i64]] = &[
            &[1, 2, 3, 4],
            &[2, 4, 6, 8],
            &[0, 1, 0, 1],
            &[1, 3, 3, 5],
            &[5, 0, 0, 1],
        ];
        for order in [
            PivotOrder::Markowitz,
            PivotOrder::Ascending,
            PivotOrder::Descending,
        ] {
            let red = eliminate(&Integers, int_rows(rows), 4, order);
            assert_eq!(red.rank(), 3, "{order:?}");
        }
    }

    #[test]
    fn descending_pivot_rows_are_supported_below_their_column() {
        let rows: &[&[i64]] = &[&[1, 1, 0, 2], &[0, 3, 1, 1], &[4, 0, 1, 0]];
        let red = eliminate(&Integers, int_rows(rows), 4, PivotOrder::Descending);
        for p in &red.pivots {
            assert!(p.row.iter().all(|(c, _)| *c <= p.col));
            assert_eq!(p.row.last().unwrap().0, p.col);
        }
        assert_eq!(red.free_columns(), vec![0]);
    }

    #[test]
    fn prime_field_rank_drops_when_p_divides() {
        let f = PrimeField::new_unchecked(3);
        let rows = vec![vec![(0, 1u64), (1, 2)], vec![(0, 2), (1, 1)]];
        // det = 1 - 4 = -3
        assert_eq!(eliminate(&f, rows, 2, PivotOrder::Markowitz).rank(), 1);
    }
}
