//! Denominator guessing for closed-form reconstruction.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::{reconstruct, HilbertSeries, ReconstructError, TruncatedSeries};

/// Cap on candidate denominators tried before giving up.
const MAX_GUESSES: usize = 100_000;

/// Candidate denominator exponents: generator degrees closed under divisors
/// and pairwise lcm, capped at `max`.
pub(crate) fn candidate_exponents(degrees: &BTreeSet<usize>, max: usize) -> Vec<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::new();
    for &d in degrees {
        for e in 1..=d {
            if d % e == 0 && e <= max {
                set.insert(e);
            }
        }
    }
    let base: Vec<usize> = set.iter().copied().collect();
    for (i, &x) in base.iter().enumerate() {
        for &y in &base[i + 1..] {
            let l = x.lcm(&y);
            if l <= max {
                set.insert(l);
            }
        }
    }
    // Exponent 1 only appears from trivial summands, which are split off.
    set.remove(&1);
    set.into_iter().collect()
}

/// Multisets of `size` exponents with sum at most `max_sum`, ordered by
/// sum and then lexicographically.
pub(crate) fn denominator_candidates(exps: &[usize], size: usize, max_sum: usize) -> Vec<Vec<usize>> {
    fn go(
        exps: &[usize],
        start: usize,
        left: usize,
        budget: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= MAX_GUESSES {
            return;
        }
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..exps.len() {
            let e = exps[i];
            if e * left > budget {
                break;
            }
            cur.push(e);
            go(exps, i, left - 1, budget - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(exps, 0, size, max_sum, &mut Vec::new(), &mut out);
    out.sort_by_key(|v| (v.iter().sum::<usize>(), v.clone()));
    out
}

/// First denominator of `size` factors, drawn from `degrees` closed under
/// divisors and lcm, that reconstructs `s`.
pub(crate) fn first_fit(
    s: &TruncatedSeries,
    degrees: &BTreeSet<usize>,
    size: usize,
    guard: usize,
) -> Result<HilbertSeries, ReconstructError> {
    let bound = s.bound();
    let mut last = ReconstructError::TooShort {
        have: bound,
        need: 2 * size + guard,
    };
    if bound < guard {
        return Err(last);
    }
    let exps = candidate_exponents(degrees, bound - guard);
    for den in denominator_candidates(&exps, size, bound - guard) {
        match reconstruct(s, &den, guard) {
            Ok(h) => return Ok(h),
            Err(e) => last = e,
        }
    }
    Err(last)
}
