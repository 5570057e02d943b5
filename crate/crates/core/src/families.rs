//! Closed-form index values for graph families, computed by arithmetic only
//! so they can be checked against the enumeration engine.
//!
//! Formulas with known problems are evaluated exactly as stated
//! ([`Variant::AsPrinted`]) alongside a consistent alternative
//! ([`Variant::Corrected`]).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::StrengthVector;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FormError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("part sizes must be non-decreasing")]
    Unsorted,
    #[error("value overflows 64-bit arithmetic")]
    Overflow,
    #[error("strength vector sums to {got}, expected order {expected}")]
    StrengthSumMismatch { expected: usize, got: usize },
    #[error("strength vector must be non-increasing with {expected} entries")]
    NotDescending { expected: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    AsPrinted,
    Corrected,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::AsPrinted => "as_printed",
            Variant::Corrected => "corrected",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "as_printed" => Ok(Variant::AsPrinted),
            "corrected" => Ok(Variant::Corrected),
            other => Err(format!("unknown variant {other:?}")),
        }
    }
}

/// Arithmetic runs in u128 and is narrowed at the end.
fn narrow(value: u128) -> Result<u64, FormError> {
    u64::try_from(value).map_err(|_| FormError::Overflow)
}

fn wide(x: usize) -> u128 {
    x as u128
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteForms {
    pub cm1: u64,
    pub cm2: u64,
    pub cm3: u64,
    pub m1: u64,
    pub m2: u64,
    pub m3: u64,
}

/// Indices of `K_n`; every minimum coloring uses each label once.
pub fn complete_graph_forms(n: usize) -> Result<CompleteForms, FormError> {
    if n == 0 {
        return Err(FormError::InvalidParameter(
            "complete graph needs n ≥ 1".into(),
        ));
    }
    if n > 1 << 20 {
        return Err(FormError::Overflow);
    }
    let w = wide(n);
    let l = w - 1;
    Ok(CompleteForms {
        cm1: narrow(w * (w + 1) * (2 * w + 1) / 6)?,
        cm2: narrow((w + 1) * w * (w - 1) * (3 * w + 2) / 24)?,
        cm3: narrow(l * (l * l + 3 * l + 2) / 6)?,
        m1: narrow(w * l * l)?,
        m2: narrow(w * l * l * l / 2)?,
        m3: 0,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeForms {
    pub cm1_lo: u64,
    pub cm1_hi: u64,
    pub cm2: u64,
    pub cm3: u64,
}

/// Bounds and constants shared by every tree of order `n ≥ 4`.
pub fn tree_forms(n: usize) -> Result<TreeForms, FormError> {
    if n < 4 {
        return Err(FormError::InvalidParameter("tree forms need n ≥ 4".into()));
    }
    let w = wide(n);
    Ok(TreeForms {
        cm1_lo: narrow(w + 3)?,
        cm1_hi: narrow(4 * w - 3)?,
        cm2: narrow(2 * (w - 1))?,
        cm3: narrow(w - 1)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteForms {
    pub cm1_min: u64,
    pub cm1_max: u64,
    pub cm2_min: u64,
    pub cm2_max: u64,
    pub cm3: u64,
}

/// Complete multipartite `K_{n_1,…,n_r}` with `n_1 ≤ … ≤ n_r`. Part `i`
/// receives label `i` for the maxima and `r + 1 − i` for the minima.
/// `AsPrinted` evaluates the second-index minimum with weights
/// `(r − i)(r − j)`; `Corrected` uses `(r + 1 − i)(r + 1 − j)`.
pub fn multipartite_forms(
    sizes: &[usize],
    variant: Variant,
) -> Result<MultipartiteForms, FormError> {
    let r = sizes.len();
    if r < 2 {
        return Err(FormError::InvalidParameter(
            "need at least two parts".into(),
        ));
    }
    if sizes.contains(&0) {
        return Err(FormError::InvalidParameter(
            "part sizes must be positive".into(),
        ));
    }
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(FormError::Unsorted);
    }
    let n: Vec<u128> = sizes.iter().map(|&s| wide(s)).collect();
    let r = r as u128;
    // 1-based part numbers, as in the formulas.
    let part = |i: usize| n[i - 1];
    let parts = 1..=sizes.len();
    let pairs = || (1..sizes.len()).flat_map(move |i| (i + 1..=sizes.len()).map(move |j| (i, j)));

    let cm1_max = parts
        .clone()
        .map(|i| part(i) * (i as u128).pow(2))
        .sum::<u128>();
    let cm1_min = (0..sizes.len())
        .map(|i| part(i + 1) * (r - i as u128).pow(2))
        .sum::<u128>();
    let cm2_max = pairs()
        .map(|(i, j)| part(i) * part(j) * (i * j) as u128)
        .sum::<u128>();
    let cm2_min = pairs()
        .map(|(i, j)| {
            let (i, j) = (i as u128, j as u128);
            let weight = match variant {
                Variant::AsPrinted => (r - i) * (r - j),
                Variant::Corrected => (r + 1 - i) * (r + 1 - j),
            };
            part(i as usize) * part(j as usize) * weight
        })
        .sum::<u128>();
    let cm3 = pairs()
        .map(|(i, j)| part(i) * part(j) * (j - i) as u128)
        .sum::<u128>();
    Ok(MultipartiteForms {
        cm1_min: narrow(cm1_min)?,
        cm1_max: narrow(cm1_max)?,
        cm2_min: narrow(cm2_min)?,
        cm2_max: narrow(cm2_max)?,
        cm3: narrow(cm3)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualMultipartiteForms {
    pub cm1: u64,
    pub cm2: u64,
    /// `n² Σ_{i=1}^{r−1} i(r − 1)`, as stated.
    pub cm3_printed: u64,
    /// `n² Σ_{i<j} (j − i)`, the pair sum specialised to equal parts.
    pub cm3_pairsum: u64,
}

/// `r` parts of size `n`; all labelings give the same values.
pub fn equal_multipartite_forms(n: usize, r: usize) -> Result<EqualMultipartiteForms, FormError> {
    if n == 0 || r < 2 {
        return Err(FormError::InvalidParameter("need n ≥ 1 and r ≥ 2".into()));
    }
    let (w, rr) = (wide(n), wide(r));
    let cm2_sum: u128 = (2..=rr).map(|i| i * i * (i - 1)).sum();
    let printed_sum: u128 = (1..rr).map(|i| i * (rr - 1)).sum();
    let pair_sum: u128 = (1..rr).flat_map(|i| (i + 1..=rr).map(move |j| j - i)).sum();
    Ok(EqualMultipartiteForms {
        cm1: narrow(w * rr * (rr + 1) * (2 * rr + 1) / 6)?,
        cm2: narrow(w * w * cm2_sum / 2)?,
        cm3_printed: narrow(w * w * printed_sum)?,
        cm3_pairsum: narrow(w * w * pair_sum)?,
    })
}

/// Inputs for the uniform thorn graph `G*` (`m` pendants on every vertex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThornInputs {
    /// Order of the base graph.
    pub n: usize,
    pub m: usize,
    /// χ of the base graph.
    pub ell: usize,
    /// Base `[cm1, cm2, cm3]` minima and maxima.
    pub base_min: [u64; 3],
    pub base_max: [u64; 3],
    /// Class sizes of colorings attaining the base minima of the first,
    /// second and third index, each non-increasing.
    pub theta: StrengthVector,
    pub theta2: StrengthVector,
    pub theta3: StrengthVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThornForms {
    pub cm1_min: u64,
    pub cm1_max: u64,
    pub cm2_min: u64,
    pub cm2_max: u64,
    pub cm3_min: u64,
    pub cm3_max: u64,
}

impl ThornForms {
    pub fn values(&self) -> [u64; 6] {
        [
            self.cm1_min,
            self.cm1_max,
            self.cm2_min,
            self.cm2_max,
            self.cm3_min,
            self.cm3_max,
        ]
    }
}

fn check_strengths(theta: &StrengthVector, n: usize, ell: usize) -> Result<(), FormError> {
    if theta.0.len() != ell || !theta.is_non_increasing() {
        return Err(FormError::NotDescending { expected: ell });
    }
    if theta.total() != n {
        return Err(FormError::StrengthSumMismatch {
            expected: n,
            got: theta.total(),
        });
    }
    Ok(())
}

/// Evaluates the six thorn formulas term by term. For `m = 0` the thorn
/// graph is the base graph and the base values are returned unchanged; the
/// last formula has no `m` factor and would otherwise add pendant terms for
/// pendants that do not exist.
pub fn thorn_forms(input: &ThornInputs) -> Result<ThornForms, FormError> {
    let ThornInputs { n, m, ell, .. } = *input;
    if ell < 2 {
        return Err(FormError::InvalidParameter("thorn forms need ℓ ≥ 2".into()));
    }
    for theta in [&input.theta, &input.theta2, &input.theta3] {
        check_strengths(theta, n, ell)?;
    }
    let [b1, b2, b3] = input.base_min.map(u128::from);
    let [t1, t2, t3] = input.base_max.map(u128::from);
    if m == 0 {
        return Ok(ThornForms {
            cm1_min: input.base_min[0],
            cm1_max: input.base_max[0],
            cm2_min: input.base_min[1],
            cm2_max: input.base_max[1],
            cm3_min: input.base_min[2],
            cm3_max: input.base_max[2],
        });
    }
    let (wn, wm, l) = (wide(n), wide(m), wide(ell));
    // 1-based strength lookups.
    let th = |i: u128| wide(input.theta.0[i as usize - 1]);
    let th2 = |i: u128| wide(input.theta2.0[i as usize - 1]);
    let th3 = |i: u128| wide(input.theta3.0[i as usize - 1]);

    let cm1_min = b1 + 4 * wm * th(1) + wm * (wn - th(1));
    let cm1_max = t1 + wm * (l - 1) * (l - 1) * th(1) + wm * l * l * (wn - th(1));
    let cm2_min = b2 + 2 * wm * th2(1) + (2..=l).map(|i| wm * i * th(i)).sum::<u128>();
    let cm2_max = t2
        + wm * l * (l - 1) * th2(1)
        + (2..=l).map(|i| wm * l * (l + 1 - i) * th2(i)).sum::<u128>();
    let cm3_min = b3 + wm * wn;
    let half_down = l / 2;
    let half_up = l.div_ceil(2);
    let low: u128 = (1..=half_down).map(|i| (l - i) * th3(i)).sum();
    let cm3_max = if l % 2 == 1 {
        let high: u128 = (half_up..l).map(|i| i * th3(i + 1)).sum();
        t3 + half_down * th3(half_up) + low + high
    } else {
        let high: u128 = (half_down..l).map(|i| i * th3(i + 1)).sum();
        t3 + low + high
    };
    Ok(ThornForms {
        cm1_min: narrow(cm1_min)?,
        cm1_max: narrow(cm1_max)?,
        cm2_min: narrow(cm2_min)?,
        cm2_max: narrow(cm2_max)?,
        cm3_min: narrow(cm3_min)?,
        cm3_max: narrow(cm3_max)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_values() {
        let k4 = complete_graph_forms(4).unwrap();
        assert_eq!((k4.cm1, k4.cm2, k4.m2), (30, 35, 54));
        assert_eq!(complete_graph_forms(3).unwrap().cm3, 4);
        let k1 = complete_graph_forms(1).unwrap();
        assert_eq!((k1.cm1, k1.m1, k1.cm2, k1.cm3), (1, 0, 0, 0));
        assert!(complete_graph_forms(0).is_err());
    }

    #[test]
    fn complete_graph_sums_agree_with_pair_sums() {
        for n in 1..=40u64 {
            let forms = complete_graph_forms(n as usize).unwrap();
            let pairs = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
            assert_eq!(forms.cm2, pairs.clone().map(|(i, j)| i * j).sum::<u64>());
            assert_eq!(forms.cm3, pairs.map(|(i, j)| j - i).sum::<u64>());
            assert_eq!(forms.m1, n * (n - 1) * (n - 1));
        }
    }

    #[test]
    fn tree_values() {
        let t = |n| {
            let f = tree_forms(n).unwrap();
            (f.cm1_lo, f.cm1_hi, f.cm2, f.cm3)
        };
        assert_eq!(t(4), (7, 13, 6, 3));
        assert_eq!(t(5), (8, 17, 8, 4));
        assert_eq!(t(10), (13, 37, 18, 9));
        assert!(tree_forms(3).is_err());
    }

    #[test]
    fn multipartite_values() {
        let k3 = multipartite_forms(&[1, 1, 1], Variant::AsPrinted).unwrap();
        assert_eq!(
            (k3.cm1_min, k3.cm1_max, k3.cm2_max, k3.cm3),
            (14, 14, 11, 4)
        );
        for n in 1..5 {
            let printed = multipartite_forms(&[n, n], Variant::AsPrinted).unwrap();
            let corrected = multipartite_forms(&[n, n], Variant::Corrected).unwrap();
            assert_eq!(printed.cm2_min, 0);
            assert_eq!(corrected.cm2_min, 2 * (n * n) as u64);
        }
        assert_eq!(
            multipartite_forms(&[2, 1], Variant::Corrected),
            Err(FormError::Unsorted)
        );
        assert!(multipartite_forms(&[3], Variant::Corrected).is_err());
        assert!(multipartite_forms(&[0, 1], Variant::Corrected).is_err());
    }

    #[test]
    fn equal_multipartite_values() {
        let k3 = equal_multipartite_forms(1, 3).unwrap();
        assert_eq!(
            (k3.cm1, k3.cm2, k3.cm3_printed, k3.cm3_pairsum),
            (14, 11, 6, 4)
        );
        for n in 1..6 {
            let f = equal_multipartite_forms(n, 2).unwrap();
            assert_eq!((f.cm2, f.cm3_pairsum), (2 * (n * n) as u64, (n * n) as u64));
        }
    }

    #[test]
    fn equal_parts_cm2_is_the_pair_product_sum() {
        for r in 2..=8u64 {
            for n in 1..=4u64 {
                let f = equal_multipartite_forms(n as usize, r as usize).unwrap();
                let pair_sum: u64 = (1..=r).flat_map(|i| (i + 1..=r).map(move |j| i * j)).sum();
                assert_eq!(f.cm2, n * n * pair_sum);
                let general =
                    multipartite_forms(&vec![n as usize; r as usize], Variant::Corrected).unwrap();
                assert_eq!(general.cm2_max, f.cm2);
                assert_eq!(general.cm3, f.cm3_pairsum);
                assert_eq!(general.cm1_max, f.cm1);
            }
        }
    }

    fn p4_inputs(m: usize) -> ThornInputs {
        ThornInputs {
            n: 4,
            m,
            ell: 2,
            base_min: [10, 6, 3],
            base_max: [10, 6, 3],
            theta: StrengthVector(vec![2, 2]),
            theta2: StrengthVector(vec![2, 2]),
            theta3: StrengthVector(vec![2, 2]),
        }
    }

    #[test]
    fn thorn_path_values() {
        let f = thorn_forms(&p4_inputs(1)).unwrap();
        assert_eq!(f.values(), [20, 20, 14, 14, 7, 7]);
        assert_eq!(
            thorn_forms(&p4_inputs(0)).unwrap().values(),
            [10, 10, 6, 6, 3, 3]
        );
    }

    #[test]
    fn thorn_triangle_values() {
        let k3 = |m| ThornInputs {
            n: 3,
            m,
            ell: 3,
            base_min: [14, 11, 4],
            base_max: [14, 11, 4],
            theta: StrengthVector(vec![1, 1, 1]),
            theta2: StrengthVector(vec![1, 1, 1]),
            theta3: StrengthVector(vec![1, 1, 1]),
        };
        assert_eq!(thorn_forms(&k3(2)).unwrap().cm3_min, 10);
        // Odd ℓ: 4 + 1·θ″₂ + 2·θ″₁ + 2·θ″₃.
        assert_eq!(thorn_forms(&k3(2)).unwrap().cm3_max, 9);
    }

    #[test]
    fn thorn_inputs_are_validated() {
        let mut bad = p4_inputs(1);
        bad.theta = StrengthVector(vec![1, 3]);
        assert_eq!(
            thorn_forms(&bad),
            Err(FormError::NotDescending { expected: 2 })
        );
        bad.theta = StrengthVector(vec![3, 2]);
        assert_eq!(
            thorn_forms(&bad),
            Err(FormError::StrengthSumMismatch {
                expected: 4,
                got: 5
            })
        );
        bad.theta = StrengthVector(vec![4]);
        assert!(thorn_forms(&bad).is_err());
        let mut single = p4_inputs(1);
        single.ell = 1;
        assert!(thorn_forms(&single).is_err());
    }
}
