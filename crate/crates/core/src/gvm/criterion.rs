use crate::error::Result;
use crate::multi_index::MultiIndex;
use crate::rational::{as_natural, in_int_range, int};
use crate::weight::{BlockProfile, Weight};

/// Outcome of the two-case simplicity test for `M_p(L(μ))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityVerdict {
    pub simple: bool,
    pub case1: bool,
    pub case2: bool,
    /// `μ_ī + m + 1 - ī` when it is a positive integer.
    pub l: Option<u64>,
    /// Exponents where a singular vector is expected, in ≺ order.
    pub predicted: Vec<MultiIndex>,
}

/// The module is not simple exactly when
/// (1) `ī ≠ m`, `l = μ_ī + m + 1 - ī ∈ ℕ` and `μ_ī - μ_{ī+1} ∉ {0, ..., l-1}`, or
/// (2) `μ_m + 1 ∈ ℕ`.
pub fn simplicity_criterion(mu: &Weight, profile: &BlockProfile) -> Result<SimplicityVerdict> {
    let checked = BlockProfile::with_ibar(mu, profile.ibar)?;
    let m = mu.len();
    let l = checked.l;
    let case1 = match (&checked.a, l) {
        (Some(a), Some(l)) => !in_int_range(a, 0, l as i64 - 1),
        _ => false,
    };
    let top = as_natural(&(mu.get(m) + int(1)));
    let case2 = top.is_some();
    let mut predicted = Vec::new();
    if case1 {
        predicted.push(MultiIndex::unit(m, checked.ibar, l.unwrap() as u32));
    }
    if let Some(n) = top {
        predicted.push(MultiIndex::unit(m, m, n as u32));
    }
    predicted.sort();
    predicted.dedup();
    Ok(SimplicityVerdict {
        simple: !(case1 || case2),
        case1,
        case2,
        l: if checked.ibar < m { l } else { None },
        predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn verdict(mu: Weight) -> SimplicityVerdict {
        let p = BlockProfile::from_weight(&mu).unwrap();
        simplicity_criterion(&mu, &p).unwrap()
    }

    #[test]
    fn examples() {
        let v = verdict(Weight::from_ints(&[0, 0]));
        assert!(!v.simple && !v.case1 && v.case2);
        assert_eq!(v.predicted, vec![MultiIndex::new(vec![0, 1])]);

        let v = verdict(Weight::new(vec![int(-1), frac(-1, 2)]).unwrap());
        assert!(!v.simple && v.case1 && !v.case2);
        assert_eq!(v.l, Some(1));
        assert_eq!(v.predicted, vec![MultiIndex::new(vec![1, 0])]);

        let v = verdict(Weight::new(vec![frac(-1, 2), frac(-1, 3)]).unwrap());
        assert!(v.simple && v.predicted.is_empty());
    }

    #[test]
    fn integral_gap_blocks_case_one() {
        // l = 3, a = 1 ∈ {0, 1, 2}
        let v = verdict(Weight::new(vec![int(0), int(-1), int(-1)]).unwrap());
        assert!(!v.case1);
        assert_eq!(v.l, Some(3));
        assert!(!v.case2 && v.simple);
    }

    #[test]
    fn both_cases() {
        let v = verdict(Weight::from_ints(&[-1, 0]));
        assert!(v.case1 && v.case2);
        assert_eq!(
            v.predicted,
            vec![MultiIndex::new(vec![0, 1]), MultiIndex::new(vec![1, 0])]
        );
        let v = verdict(Weight::from_ints(&[2, 2, 0]));
        assert!(!v.case1 && v.case2);
        assert_eq!(v.l, Some(4));
    }

    #[test]
    fn profile_must_fit() {
        let mu = Weight::from_ints(&[2, 2, 0]);
        let p = BlockProfile::from_weight(&Weight::from_ints(&[2, 0, 0])).unwrap();
        assert!(simplicity_criterion(&mu, &p).is_err());
    }
}
