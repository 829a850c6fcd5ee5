use std::fmt;

use super::largeness::{largeness_report, subset_ranks};
use super::WeightMatrix;
use crate::certify::shell_a_invariant;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Undetermined => "undetermined",
        })
    }
}

/// Geometry of the shell `N = mu^-1(0)` and of the symplectic quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellDiagnostics {
    /// The raw module is not stable; shell verdicts describe its own shell,
    /// quotient verdicts the quotient of its stable reduction.
    pub unreduced: bool,
    pub shell_dimension: usize,
    /// `2n - l`.
    pub expected_dimension: i64,
    pub complete_intersection: bool,
    /// Shell a-invariant `2l - 2n`, when `N` is a complete intersection.
    pub shell_a_invariant: Option<i64>,
    /// Points of `N` with infinite isotropy; on a complete intersection these
    /// are exactly the singular points. `None` when there are none.
    pub infinite_isotropy_dimension: Option<usize>,
    pub shell_normal: Verdict,
    pub shell_normal_reason: String,
    pub shell_rational: Verdict,
    pub shell_rational_reason: String,
    pub quotient_normal: Verdict,
    pub quotient_rational: Verdict,
}

impl ShellDiagnostics {
    pub fn singular_codimension(&self) -> Option<usize> {
        self.infinite_isotropy_dimension
            .map(|d| self.shell_dimension - d)
    }
}

/// Support analysis of the shell.
///
/// A point of `N` where both `z_j` and `w_j` are nonzero exactly for
/// `j in P`, and exactly one of them is nonzero for `j in S - P`, exists iff
/// `A_P` has a kernel vector of full support (no coloop); the set of such
/// points has dimension `|P| - rank(A_P) + |S|`. The rank of `d mu` there
/// is `rank(A_S)`.
pub fn shell_diagnostics(a: &WeightMatrix) -> Result<ShellDiagnostics> {
    let ranks = subset_ranks(a)?;
    let report = largeness_report(a)?;
    let n = a.dimension();
    let l = a.torus_rank();
    let full = (1usize << n) - 1;

    // best[S] = max over coloop-free P inside S of |P| - rank(A_P).
    let mut best: Vec<i64> = vec![i64::MIN; 1 << n];
    for p in 0..=full {
        let coloop_free = (0..n)
            .filter(|j| p >> j & 1 == 1)
            .all(|j| ranks[p & !(1 << j)] == ranks[p]);
        if coloop_free {
            best[p] = p.count_ones() as i64 - ranks[p] as i64;
        }
    }
    for b in 0..n {
        for s in 0..=full {
            if s >> b & 1 == 1 {
                best[s] = best[s].max(best[s ^ (1 << b)]);
            }
        }
    }
    let shell_dimension = (n as i64 + best[full]) as usize;
    let expected_dimension = 2 * n as i64 - l as i64;
    let complete_intersection = shell_dimension as i64 == expected_dimension;
    let infinite_isotropy_dimension = (0..=full)
        .filter(|&s| ranks[s] < l)
        .map(|s| (s.count_ones() as i64 + best[s]) as usize)
        .max();
    let shell_a = complete_intersection.then(|| shell_a_invariant(l as u64, n as u64));

    let stable_faithful = report.stable && report.faithful_up_to_finite;
    let codim_ok = infinite_isotropy_dimension.is_none_or(|d| shell_dimension - d >= 2);
    let (shell_normal, shell_normal_reason) = if stable_faithful {
        (Verdict::Yes, "stable and faithful torus module".to_string())
    } else if complete_intersection && codim_ok {
        (
            Verdict::Yes,
            "complete intersection, singular locus of codimension at least 2".to_string(),
        )
    } else if complete_intersection {
        (
            Verdict::No,
            "complete intersection singular in codimension 1".to_string(),
        )
    } else {
        (
            Verdict::Undetermined,
            "shell is not a complete intersection".to_string(),
        )
    };
    let (shell_rational, shell_rational_reason) = if stable_faithful {
        (Verdict::Yes, "stable and faithful torus module".to_string())
    } else if let Some(sa) = shell_a.filter(|&x| x >= 0) {
        (
            Verdict::No,
            format!("Cohen-Macaulay shell with a-invariant {sa} >= 0"),
        )
    } else if shell_normal == Verdict::No {
        (Verdict::No, "shell is not normal".to_string())
    } else {
        (
            Verdict::Undetermined,
            "negative a-invariant without a stability argument".to_string(),
        )
    };
    Ok(ShellDiagnostics {
        unreduced: !report.stable,
        shell_dimension,
        expected_dimension,
        complete_intersection,
        shell_a_invariant: shell_a,
        infinite_isotropy_dimension,
        shell_normal,
        shell_normal_reason,
        shell_rational,
        shell_rational_reason,
        quotient_normal: Verdict::Yes,
        quotient_rational: Verdict::Yes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wm(rows: &[Vec<i64>]) -> WeightMatrix {
        WeightMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn opposite_weights() {
        let d = shell_diagnostics(&wm(&[vec![1, -1]])).unwrap();
        assert!(d.complete_intersection && !d.unreduced);
        assert_eq!(d.shell_dimension, 3);
        assert_eq!(d.singular_codimension(), Some(3));
        assert_eq!((d.shell_normal, d.shell_rational), (Verdict::Yes, Verdict::Yes));
        assert_eq!(d.shell_a_invariant, Some(-2));
    }

    #[test]
    fn identity_shell_is_not_rational() {
        for n in 1..=4 {
            let d = shell_diagnostics(&WeightMatrix::identity(n)).unwrap();
            assert!(d.unreduced && d.complete_intersection);
            assert_eq!(d.shell_a_invariant, Some(0));
            assert_eq!(d.shell_rational, Verdict::No);
            // Coordinate cross {z_j w_j = 0}: singular in codimension 1.
            assert_eq!(d.shell_normal, Verdict::No);
            assert_eq!(d.quotient_rational, Verdict::Yes);
        }
    }

    #[test]
    fn unstable_quadric_cone() {
        let d = shell_diagnostics(&wm(&[vec![1, 1]])).unwrap();
        assert!(d.unreduced);
        assert_eq!(d.shell_normal, Verdict::Yes);
        assert_eq!(d.shell_rational, Verdict::Undetermined);
    }

    #[test]
    fn degenerate_rank_is_not_complete_intersection() {
        let d = shell_diagnostics(&wm(&[vec![1, -1], vec![2, -2]])).unwrap();
        assert_eq!(d.shell_dimension, 3);
        assert_eq!(d.expected_dimension, 2);
        assert!(!d.complete_intersection);
        assert_eq!(d.shell_a_invariant, None);
    }
}
