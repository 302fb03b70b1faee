//! Iso(G): the poset of isomorphism classes of subgroups, plus the
//! conjugacy-class poset C(G) and the subposet of solitary classes.

use crate::grpiso::{fingerprint, partition_classes, Fingerprint};
use crate::names::name_group;
use crate::poset::Poset;
use crate::subgrp::{subgroup_as_group, SubgroupLattice};
use crate::{Caps, Result};

/// The poset of isomorphism classes of subgroups. Class `A <= B` iff some
/// member of `A` is contained in some member of `B`; this relation happens to
/// be a partial order (transitivity is a theorem, checked on construction).
pub struct IsoPoset {
    pub poset: Poset,
    /// Per class, the subgroup ids it contains (ascending).
    pub classes: Vec<Vec<usize>>,
    /// Per class, the smallest member id.
    pub representative: Vec<usize>,
    pub class_fingerprint: Vec<Fingerprint>,
}

impl IsoPoset {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Order of the subgroups in a class.
    pub fn class_order(&self, c: usize) -> usize {
        self.class_fingerprint[c].order
    }
}

pub fn build_iso_poset(l: &SubgroupLattice, caps: &Caps) -> Result<IsoPoset> {
    let groups: Vec<_> = (0..l.len())
        .map(|i| subgroup_as_group(l, i, caps))
        .collect::<Result<_>>()?;
    let classes = partition_classes(&groups);
    let representative: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let class_fingerprint: Vec<Fingerprint> = representative
        .iter()
        .map(|&r| fingerprint(&groups[r]))
        .collect();
    let labels: Vec<String> = representative
        .iter()
        .map(|&r| name_group(&groups[r], caps))
        .collect();
    let leq = |a: usize, b: usize| {
        classes[a]
            .iter()
            .any(|&k1| classes[b].iter().any(|&k2| l.leq(k1, k2)))
    };
    let poset = Poset::new(labels, leq)?;
    debug_assert_eq!(poset.bottom(), Some(0));
    debug_assert_eq!(poset.top(), Some(classes.len() - 1));
    // the order map class -> subgroup order is isotone
    debug_assert!((0..classes.len()).all(|a| {
        (0..classes.len()).all(|b| {
            !poset.leq(a, b) || class_fingerprint[b].order.is_multiple_of(class_fingerprint[a].order)
        })
    }));
    Ok(IsoPoset {
        poset,
        classes,
        representative,
        class_fingerprint,
    })
}

/// Induced subposet on the solitary classes (classes with a single member).
pub fn solitary_subposet(ip: &IsoPoset) -> Poset {
    let singletons: Vec<usize> = (0..ip.len())
        .filter(|&c| ip.classes[c].len() == 1)
        .collect();
    ip.poset
        .induced(&singletons)
        .expect("induced order of a poset is a poset")
}

/// The poset C(G) of conjugacy classes of subgroups, ordered by "some
/// conjugate is contained in some conjugate".
pub fn conjugacy_class_poset(l: &SubgroupLattice) -> Result<Poset> {
    let k = l.num_conjugacy_classes();
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (id, &c) in l.conjugacy_class_ids.iter().enumerate() {
        classes[c].push(id);
    }
    classes.sort_by_key(|c| (l.subgroups[c[0]].order, c[0]));
    let labels: Vec<String> = classes
        .iter()
        .map(|c| format!("|{}|({})", l.subgroups[c[0]].order, c.len()))
        .collect();
    Poset::new(labels, |a, b| {
        classes[a]
            .iter()
            .any(|&k1| classes[b].iter().any(|&k2| l.leq(k1, k2)))
    })
}

/// Decision with witness for the order-pq dichotomy: for each
/// pair of distinct primes p, q dividing |G|, the subgroups of order pq are
/// either all cyclic or all non-abelian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqDecision {
    pub holds: bool,
    /// On failure, (cyclic subgroup id, non-cyclic subgroup id) of equal
    /// order pq.
    pub witness: Option<(usize, usize)>,
}

pub fn pq_property(l: &SubgroupLattice, caps: &Caps) -> Result<PqDecision> {
    use crate::group::factorize;
    let primes: Vec<u64> = factorize(l.parent.order() as u64)
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            let pq = (primes[i] * primes[j]) as usize;
            let mut cyclic: Option<usize> = None;
            let mut noncyclic: Option<usize> = None;
            for id in 0..l.len() {
                if l.subgroups[id].order != pq {
                    continue;
                }
                let h = subgroup_as_group(l, id, caps)?;
                // a group of order pq is cyclic iff it is abelian
                let is_cyclic = h.elements().any(|a| h.element_order(a) == pq);
                if is_cyclic {
                    cyclic.get_or_insert(id);
                } else {
                    noncyclic.get_or_insert(id);
                }
                if let (Some(c), Some(n)) = (cyclic, noncyclic) {
                    return Ok(PqDecision {
                        holds: false,
                        witness: Some((c, n)),
                    });
                }
            }
        }
    }
    Ok(PqDecision {
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct, GroupSpec};
    use crate::poset::{pentagon, poset_isomorphic, properties};
    use crate::subgrp::enumerate_subgroups;

    fn iso_of(spec: GroupSpec) -> IsoPoset {
        let caps = Caps::default();
        let g = construct(&spec, &caps).unwrap();
        let l = enumerate_subgroups(&g, &caps).unwrap();
        build_iso_poset(&l, &caps).unwrap()
    }

    #[test]
    fn trivial_group() {
        let ip = iso_of(GroupSpec::Cyclic(1));
        assert_eq!(ip.len(), 1);
    }

    #[test]
    fn z6_is_grid() {
        let ip = iso_of(GroupSpec::Cyclic(6));
        assert_eq!(ip.len(), 4);
        let grid = Poset::chain(2).product(&Poset::chain(2)).unwrap();
        assert!(poset_isomorphic(&ip.poset, &grid).is_some());
    }

    #[test]
    fn a4_is_pentagon() {
        let ip = iso_of(GroupSpec::Alternating(4));
        assert_eq!(ip.len(), 5);
        assert!(poset_isomorphic(&ip.poset, &pentagon()).is_some());
    }

    #[test]
    fn d12_not_lattice() {
        let ip = iso_of(GroupSpec::Dihedral(12));
        let report = properties(&ip.poset).unwrap();
        assert!(!report.is_lattice);
    }

    #[test]
    fn d8_solitary() {
        let ip = iso_of(GroupSpec::Dihedral(8));
        // classes: 1, Z2, Z4, V4, D8; singletons are 1, Z4, D8 plus the
        // center is inside the Z2 class, so solitary classes = {1, Z4, D8}?
        // computed, not assumed:
        let sol = solitary_subposet(&ip);
        assert!(sol.size() < ip.len());
        assert!(sol.size() >= 3);
    }

    #[test]
    fn zm_conjugacy_poset_is_divisor_lattice() {
        let caps = Caps::default();
        let g = construct(&GroupSpec::Metacyclic { m: 7, n: 3, r: 2 }, &caps).unwrap();
        let l = enumerate_subgroups(&g, &caps).unwrap();
        let c = conjugacy_class_poset(&l).unwrap();
        let ip = build_iso_poset(&l, &caps).unwrap();
        let d = crate::analytic::divisor_lattice(21);
        assert!(poset_isomorphic(&c, &d).is_some());
        assert!(poset_isomorphic(&ip.poset, &d).is_some());
    }

    #[test]
    fn pq_property_examples() {
        let caps = Caps::default();
        let d12 = construct(&GroupSpec::Dihedral(12), &caps).unwrap();
        let l = enumerate_subgroups(&d12, &caps).unwrap();
        let dec = pq_property(&l, &caps).unwrap();
        assert!(!dec.holds);
        let (c, n) = dec.witness.unwrap();
        assert_eq!(l.subgroups[c].order, 6);
        assert_eq!(l.subgroups[n].order, 6);

        let s3 = construct(&GroupSpec::Symmetric(3), &caps).unwrap();
        let l = enumerate_subgroups(&s3, &caps).unwrap();
        assert!(pq_property(&l, &caps).unwrap().holds);

        let z16 = construct(&GroupSpec::Cyclic(16), &caps).unwrap();
        let l = enumerate_subgroups(&z16, &caps).unwrap();
        assert!(pq_property(&l, &caps).unwrap().holds);
    }

    #[test]
    fn labels_present() {
        let ip = iso_of(GroupSpec::Dicyclic(8));
        assert_eq!(ip.poset.labels[0], "1");
        assert_eq!(ip.poset.labels[ip.len() - 1], "Q8");
    }
}
