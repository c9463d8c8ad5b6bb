//! Conical submonoids (only the identity is invertible) have at most one
//! second factor.

use crate::error::Result;
use crate::factorization::fac_over;
use crate::monoid::FiniteMonoid;
use crate::submonoid::SubMonoid;

#[derive(Clone, Debug)]
pub struct ConicalReport {
    pub conical: bool,
    pub second_factors: Vec<SubMonoid>,
    /// `|FAC(A/M)| ≤ 1`, asserted only for conical `A`.
    pub bound_holds: Option<bool>,
}

impl ConicalReport {
    pub fn holds(&self) -> bool {
        self.bound_holds != Some(false)
    }
}

pub fn conical_check(m: &FiniteMonoid, a: &SubMonoid) -> Result<ConicalReport> {
    let conical = a.is_conical();
    let second_factors = fac_over(m, a)?;
    let bound_holds = conical.then_some(second_factors.len() <= 1);
    Ok(ConicalReport { conical, second_factors, bound_holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn examples() {
        let m = catalog::b2_times_c2();
        let rep = conical_check(&m, &SubMonoid::new(&m, [0, 2]).unwrap()).unwrap();
        assert!(rep.conical && rep.holds());
        assert_eq!(rep.second_factors, vec![SubMonoid::new(&m, [0, 1]).unwrap()]);

        let s3 = catalog::symmetric3();
        let rep = conical_check(&s3, &SubMonoid::trivial(&s3)).unwrap();
        assert!(rep.conical);
        assert_eq!(rep.second_factors, vec![SubMonoid::whole(&s3)]);

        let a3 = SubMonoid::closure(&s3, [s3.find_label("(123)").unwrap()]).unwrap();
        let rep = conical_check(&s3, &a3).unwrap();
        assert!(!rep.conical);
        assert_eq!(rep.bound_holds, None);
        assert_eq!(rep.second_factors.len(), 3);
    }
}
