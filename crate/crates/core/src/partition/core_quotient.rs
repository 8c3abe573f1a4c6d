//! The r-core / r-quotient bijection through Maya sub-diagrams.

use serde::{Deserialize, Serialize};

use super::maya::{from_maya, to_maya, MayaDiagram};
use super::{MultiPartition, Partition};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: MultiPartition,
    pub r: u32,
    /// Charges `c_0, ..., c_{r-1}` of the sub-diagrams; they sum to zero.
    pub charges: Vec<i64>,
}

impl CoreQuotient {
    pub fn quotient_size(&self) -> u32 {
        self.quotient.size()
    }
}

fn check_r(r: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be at least 1".into()));
    }
    Ok(())
}

/// Core, quotient and charge vector of `λ`.
pub fn core_quotient(lambda: &Partition, r: u32) -> Result<CoreQuotient> {
    check_r(r)?;
    let m = to_maya(lambda);
    let ri = r as i64;
    let mut charges = Vec::with_capacity(r as usize);
    let mut quotient = Vec::with_capacity(r as usize);
    let mut core_subs = Vec::with_capacity(r as usize);
    for i in 0..ri {
        let sub = m.subdiagram(i, ri);
        let c = sub.charge();
        quotient.push(from_maya(&sub.shift(c))?);
        charges.push(c);
        core_subs.push(shifted_vacuum(c));
    }
    let core = from_maya(&MayaDiagram::interleave(&core_subs))?;
    Ok(CoreQuotient {
        core,
        quotient: MultiPartition(quotient),
        r,
        charges,
    })
}

/// Black exactly at `n < c`.
fn shifted_vacuum(c: i64) -> MayaDiagram {
    if c >= 0 {
        MayaDiagram::from_deviation(0..c, []).unwrap()
    } else {
        MayaDiagram::from_deviation([], c..0).unwrap()
    }
}

pub fn is_core(alpha: &Partition, r: u32) -> Result<bool> {
    Ok(core_quotient(alpha, r)?.quotient.size() == 0)
}

/// The unique partition with the given core and quotient.
pub fn from_core_quotient(core: &Partition, quotient: &MultiPartition, r: u32) -> Result<Partition> {
    check_r(r)?;
    if quotient.r() != r {
        return Err(Error::InvalidInput(format!(
            "quotient has {} components, expected {}",
            quotient.r(),
            r
        )));
    }
    let cq = core_quotient(core, r)?;
    if cq.quotient.size() != 0 {
        return Err(Error::InvalidInput(format!("{} is not a {}-core", core, r)));
    }
    let subs: Vec<MayaDiagram> = quotient
        .0
        .iter()
        .zip(&cq.charges)
        .map(|(p, &c)| to_maya(p).shift(-c))
        .collect();
    from_maya(&MayaDiagram::interleave(&subs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_slice(parts)
    }

    #[test]
    fn worked_example() {
        let cq = core_quotient(&p(&[6, 4, 1]), 3).unwrap();
        assert_eq!(cq.quotient, MultiPartition(vec![p(&[1, 1]), p(&[]), p(&[])]));
        assert_eq!(cq.core, p(&[3, 1, 1]));
        assert_eq!(cq.charges, vec![-1, 0, 1]);
        assert_eq!(from_core_quotient(&cq.core, &cq.quotient, 3).unwrap(), p(&[6, 4, 1]));
    }

    #[test]
    fn trivial_modulus() {
        let l = p(&[4, 2, 2, 1]);
        let cq = core_quotient(&l, 1).unwrap();
        assert_eq!(cq.core, Partition::empty());
        assert_eq!(cq.quotient.0, vec![l]);
    }

    #[test]
    fn reconstruction_from_empty_core() {
        let e = Partition::empty();
        let q = MultiPartition(vec![p(&[1]), e.clone(), e.clone()]);
        let l = from_core_quotient(&e, &q, 3).unwrap();
        assert_eq!(l.size(), 3);
        assert_eq!(
            from_core_quotient(&e, &MultiPartition::empty(3), 3).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn non_core_is_rejected() {
        let q = MultiPartition::empty(3);
        assert!(from_core_quotient(&p(&[3]), &q, 3).is_err());
    }
}
