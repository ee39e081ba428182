//! Enumeration of tableau families and Kostka counting.
//!
//! All enumeration is plain backtracking over the boxes in row-major order;
//! the sizes of interest are desk scale. Semistandard enumerators emit in
//! the total tableau order, the filling enumerators for row-distinct and
//! restricted tableaux emit in row-major lexicographic order of their entry
//! lists.

use crate::error::{Error, Result};
use crate::tableaux::partition::{Partition, Weight};
use crate::tableaux::tableau::{sort_tableaux, Tableau};

/// All partitions of n with at most `max_length` parts, each at most
/// `max_part`, in graded lexicographic order.
pub fn partitions_of(n: usize, max_length: usize, max_part: usize) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        max_part: usize,
        slots: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::new(acc.clone()).expect("built non-increasing"));
            return;
        }
        if slots == 0 {
            return;
        }
        // Smallest feasible lead part keeps the remainder packable.
        let lo = remaining.div_ceil(slots);
        for part in lo..=max_part.min(remaining) {
            acc.push(part);
            rec(remaining - part, part, slots - 1, acc, out);
            acc.pop();
        }
    }

    let mut out = Vec::new();
    rec(n, max_part, max_length, &mut Vec::new(), &mut out);
    out.sort_by(crate::tableaux::partition_cmp);
    out
}

/// Semistandard fillings of the given shape with exactly the given weight.
fn fill_semistandard(shape: &Partition, mu: &Weight) -> Vec<Tableau> {
    let m = mu.len();
    let boxes: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(k, &len)| (0..len).map(move |l| (k, l)))
        .collect();

    fn rec(
        boxes: &[(usize, usize)],
        pos: usize,
        rows: &mut Vec<Vec<usize>>,
        remaining: &mut [usize],
        out: &mut Vec<Tableau>,
    ) {
        if pos == boxes.len() {
            out.push(Tableau::new(rows.clone()).expect("shape fixed"));
            return;
        }
        let (k, l) = boxes[pos];
        let m = remaining.len();
        let mut lo = 1;
        if l > 0 {
            lo = lo.max(rows[k][l - 1]); // weakly increasing along the row
        }
        if k > 0 {
            lo = lo.max(rows[k - 1][l] + 1); // strictly increasing down the column
        }
        for e in lo..=m {
            if remaining[e - 1] == 0 {
                continue;
            }
            remaining[e - 1] -= 1;
            rows[k].push(e);
            rec(boxes, pos + 1, rows, remaining, out);
            rows[k].pop();
            remaining[e - 1] += 1;
        }
    }

    if shape.size() != mu.total() || shape.length() > m {
        return Vec::new();
    }
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut remaining: Vec<usize> = mu.counts().to_vec();
    let mut out = Vec::new();
    rec(&boxes, 0, &mut rows, &mut remaining, &mut out);
    out
}

/// The Kostka number: semistandard tableaux of the given shape and weight,
/// counted by direct enumeration. Zero when |λ| differs from |μ|.
pub fn kostka(shape: &Partition, mu: &Weight) -> usize {
    fill_semistandard(shape, mu).len()
}

/// All semistandard tableaux of the given weight, optionally restricted to
/// diagrams with at most `max_columns` columns (λ₁ <= max_columns), sorted
/// into the total tableau order.
pub fn enumerate_ssyt(mu: &Weight, max_columns: Option<usize>) -> Vec<Tableau> {
    let n = mu.total();
    let m = mu.len();
    let max_cols = max_columns.unwrap_or(n).min(n);
    if n == 0 {
        return vec![Tableau::empty()];
    }
    let mut out = Vec::new();
    for shape in partitions_of(n, m, max_cols) {
        out.extend(fill_semistandard(&shape, mu));
    }
    sort_tableaux(&mut out);
    out
}

/// Dimension of the weight space: semistandard tableaux of weight μ with at
/// most p columns, equivalently the Kostka numbers summed over shapes.
pub fn weight_space_dim(mu: &Weight, p: usize) -> usize {
    enumerate_ssyt(mu, Some(p)).len()
}

/// All fillings of the shape with entries in 1..=p that are distinct within
/// each row, in row-major lexicographic order. Empty when some row is
/// longer than p.
pub fn enumerate_row_distinct(shape: &Partition, p: usize) -> Vec<Tableau> {
    fn rec(
        parts: &[usize],
        p: usize,
        row: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if row == parts.len() {
            out.push(Tableau::new(rows.clone()).expect("shape fixed"));
            return;
        }
        fill_row(parts, p, row, rows, out);
    }

    fn fill_row(
        parts: &[usize],
        p: usize,
        row: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if rows[row].len() == parts[row] {
            rec(parts, p, row + 1, rows, out);
            return;
        }
        for v in 1..=p {
            if rows[row].contains(&v) {
                continue;
            }
            rows[row].push(v);
            fill_row(parts, p, row, rows, out);
            rows[row].pop();
        }
    }

    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    rec(shape.parts(), p, 0, &mut rows, &mut out);
    out
}

/// All row-distinct fillings C of the shape of `a` with entries in 1..=p
/// subject to the restriction pattern of the semistandard tableau `a`:
/// entries of C at equal entries of `a` are pairwise distinct, and strictly
/// increase along a row segment where `a` is constant. Emitted in row-major
/// lexicographic order.
pub fn enumerate_a_restricted(a: &Tableau, p: usize) -> Result<Vec<Tableau>> {
    if !a.is_semistandard() {
        return Err(Error::invalid(
            "restricted fillings are indexed by a semistandard tableau",
        ));
    }
    let boxes: Vec<(usize, usize, usize)> = a.boxes().collect();

    struct State<'s> {
        boxes: &'s [(usize, usize, usize)],
        p: usize,
        // used[v-1] = values of C already placed at boxes where `a` has entry v
        used_per_letter: Vec<Vec<usize>>,
        rows: Vec<Vec<usize>>,
        out: Vec<Tableau>,
    }

    fn rec(st: &mut State<'_>, pos: usize) {
        if pos == st.boxes.len() {
            st.out
                .push(Tableau::new(st.rows.clone()).expect("shape fixed"));
            return;
        }
        let (k, l, letter) = st.boxes[pos];
        // Strict increase along a constant segment of `a`.
        let mut lo = 1;
        if l > 1 && st.boxes[pos - 1].2 == letter {
            lo = st.rows[k - 1][l - 2] + 1;
        }
        for v in lo..=st.p {
            if st.rows[k - 1].contains(&v) {
                continue; // row-distinct
            }
            if st.used_per_letter[letter - 1].contains(&v) {
                continue; // distinct across equal letters of `a`
            }
            st.rows[k - 1].push(v);
            st.used_per_letter[letter - 1].push(v);
            rec(st, pos + 1);
            st.used_per_letter[letter - 1].pop();
            st.rows[k - 1].pop();
        }
    }

    let mut st = State {
        boxes: &boxes,
        p,
        used_per_letter: vec![Vec::new(); a.max_entry()],
        rows: a.rows().iter().map(|_| Vec::new()).collect(),
        out: Vec::new(),
    };
    rec(&mut st, 0);
    Ok(st.out)
}

/// All weights μ ∈ N₀^m with |μ| <= max_total, in graded lexicographic
/// order.
pub fn weights_up_to(m: usize, max_total: usize) -> Vec<Weight> {
    fn rec(total: usize, slots: usize, acc: &mut Vec<usize>, out: &mut Vec<Weight>) {
        if slots == 1 {
            acc.push(total);
            out.push(Weight::new(acc.clone()));
            acc.pop();
            return;
        }
        for first in 0..=total {
            acc.push(first);
            rec(total - first, slots - 1, acc, out);
            acc.pop();
        }
    }

    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    for total in 0..=max_total {
        rec(total, m, &mut Vec::new(), &mut out);
    }
    out
}
