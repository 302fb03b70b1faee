//! Group isomorphism at desk scale: invariant fingerprints for pruning and a
//! complete generator-image backtracking search as the decision procedure.

use crate::analytic::AbelianType;
use crate::group::{closure, invariants, Group};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Cheap isomorphism invariants. Equal fingerprints are necessary but not
/// sufficient for isomorphism, except in the abelian case where the type
/// decides.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub exponent: usize,
    pub abelian: bool,
    pub abelian_type: Option<AbelianType>,
    pub center_order: usize,
    pub derived_subgroup_order: usize,
    pub element_order_histogram: Vec<(usize, usize)>,
}

impl Fingerprint {
    /// Short stable digest used in labels for unrecognized groups.
    pub fn short_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update(format!("{self:?}"));
        let out = hasher.finalize();
        format!("{:02x}{:02x}{:02x}{:02x}", out[0], out[1], out[2], out[3])
    }
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let inv = invariants(g);
    Fingerprint {
        order: inv.order,
        exponent: inv.exponent,
        abelian: inv.abelian,
        abelian_type: inv.abelian_type,
        center_order: inv.center_order,
        derived_subgroup_order: inv.derived_subgroup_order,
        element_order_histogram: inv.element_order_histogram.into_iter().collect(),
    }
}

/// A short generating sequence: repeatedly add the element of largest order
/// that enlarges the generated subgroup.
pub fn generating_sequence(g: &Group) -> Vec<u16> {
    let mut gens = Vec::new();
    let mut generated = closure(g, []);
    let orders: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
    while generated.count() < g.order() {
        let next = g
            .elements()
            .filter(|&a| !generated.contains(a as usize))
            .max_by_key(|&a| (orders[a as usize], std::cmp::Reverse(a)))
            .expect("group not yet generated");
        gens.push(next);
        generated = closure(g, gens.iter().copied());
    }
    gens
}

/// Verified isomorphism witness: an element bijection `g1 -> g2`.
pub fn verify_witness(g1: &Group, g2: &Group, map: &[u16]) -> bool {
    if g1.order() != g2.order() || map.len() != g1.order() {
        return false;
    }
    let mut seen = vec![false; g2.order()];
    for &m in map {
        if (m as usize) >= g2.order() || seen[m as usize] {
            return false;
        }
        seen[m as usize] = true;
    }
    g1.elements().all(|a| {
        g1.elements().all(|b| {
            map[g1.mul(a, b) as usize] == g2.mul(map[a as usize], map[b as usize])
        })
    })
}

/// Complete isomorphism decision. Returns a verified witness map on success.
///
/// Fingerprints (which include the abelian type) prune first; otherwise a
/// backtracking search assigns images to a short generating sequence of `g1`
/// and extends each partial assignment over the generated subgroup, checking
/// table consistency as it goes.
pub fn is_isomorphic(g1: &Group, g2: &Group) -> Option<Vec<u16>> {
    if g1.order() != g2.order() {
        return None;
    }
    let f1 = fingerprint(g1);
    let f2 = fingerprint(g2);
    if f1 != f2 {
        return None;
    }
    let gens = generating_sequence(g1);
    let n = g1.order();
    let orders1: Vec<usize> = g1.elements().map(|a| g1.element_order(a)).collect();
    let orders2: Vec<usize> = g2.elements().map(|a| g2.element_order(a)).collect();

    // map[a] = image of a, or u16::MAX when unassigned
    let mut map = vec![u16::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut mapped: Vec<u16> = vec![0];

    fn extend(
        g1: &Group,
        g2: &Group,
        map: &mut [u16],
        used: &mut [bool],
        mapped: &mut Vec<u16>,
        gen: u16,
        image: u16,
    ) -> Option<usize> {
        // Returns how many assignments were made (for rollback), or None on
        // inconsistency (after rolling back itself).
        let start = mapped.len();
        let mut added = 0usize;
        let push = |a: u16,
                        b: u16,
                        map: &mut [u16],
                        used: &mut [bool],
                        mapped: &mut Vec<u16>,
                        added: &mut usize|
         -> bool {
            let cur = map[a as usize];
            if cur != u16::MAX {
                return cur == b;
            }
            if used[b as usize] {
                return false;
            }
            map[a as usize] = b;
            used[b as usize] = true;
            mapped.push(a);
            *added += 1;
            true
        };
        let ok = (|| {
            if !push(gen, image, map, used, mapped, &mut added) {
                return false;
            }
            let mut front = start;
            while front < mapped.len() {
                let x = mapped[front];
                let fx = map[x as usize];
                let mut i = 0;
                while i < mapped.len() {
                    let y = mapped[i];
                    let fy = map[y as usize];
                    if !push(g1.mul(x, y), g2.mul(fx, fy), map, used, mapped, &mut added)
                        || !push(g1.mul(y, x), g2.mul(fy, fx), map, used, mapped, &mut added)
                    {
                        return false;
                    }
                    i += 1;
                }
                front += 1;
            }
            true
        })();
        if ok {
            Some(added)
        } else {
            for _ in 0..added {
                let a = mapped.pop().unwrap();
                used[map[a as usize] as usize] = false;
                map[a as usize] = u16::MAX;
            }
            None
        }
    }

    fn search(
        g1: &Group,
        g2: &Group,
        gens: &[u16],
        k: usize,
        orders1: &[usize],
        orders2: &[usize],
        map: &mut [u16],
        used: &mut [bool],
        mapped: &mut Vec<u16>,
    ) -> bool {
        if k == gens.len() {
            return true;
        }
        let gen = gens[k];
        for image in 0..g2.order() as u16 {
            if used[image as usize] || orders2[image as usize] != orders1[gen as usize] {
                continue;
            }
            if let Some(added) = extend(g1, g2, map, used, mapped, gen, image) {
                if search(g1, g2, gens, k + 1, orders1, orders2, map, used, mapped) {
                    return true;
                }
                for _ in 0..added {
                    let a = mapped.pop().unwrap();
                    used[map[a as usize] as usize] = false;
                    map[a as usize] = u16::MAX;
                }
            }
        }
        false
    }

    if search(
        g1, g2, &gens, 0, &orders1, &orders2, &mut map, &mut used, &mut mapped,
    ) {
        assert!(
            verify_witness(g1, g2, &map),
            "isomorphism witness failed verification"
        );
        Some(map)
    } else {
        None
    }
}

/// Partition a list of groups into isomorphism classes. Classes are sorted
/// by (order, fingerprint, smallest member index); each class lists member
/// indices ascending, the first being the representative.
pub fn partition_classes(groups: &[Group]) -> Vec<Vec<usize>> {
    let mut buckets: BTreeMap<Fingerprint, Vec<Vec<usize>>> = BTreeMap::new();
    let fps: Vec<Fingerprint> = groups.iter().map(fingerprint).collect();
    for (i, fp) in fps.iter().enumerate() {
        let classes = buckets.entry(fp.clone()).or_default();
        let mut placed = false;
        for class in classes.iter_mut() {
            let rep = class[0];
            if is_isomorphic(&groups[rep], &groups[i]).is_some() {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    let mut out: Vec<Vec<usize>> = buckets.into_values().flatten().collect();
    out.sort_by_key(|class| {
        let rep = class[0];
        (groups[rep].order(), fps[rep].clone(), rep)
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct, relabel, GroupSpec};
    use crate::subgrp::{enumerate_subgroups, subgroup_as_group};
    use crate::Caps;

    fn caps() -> Caps {
        Caps::default()
    }

    fn build(spec: GroupSpec) -> Group {
        construct(&spec, &caps()).unwrap()
    }

    #[test]
    fn z4_vs_klein() {
        let a = build(GroupSpec::Cyclic(4));
        let b = build(GroupSpec::Abelian(vec![2, 2]));
        assert_ne!(fingerprint(&a), fingerprint(&b));
        assert!(is_isomorphic(&a, &b).is_none());
    }

    #[test]
    fn d8_vs_q8() {
        let a = build(GroupSpec::Dihedral(8));
        let b = build(GroupSpec::Dicyclic(8));
        let fa = fingerprint(&a);
        let fb = fingerprint(&b);
        assert_ne!(fa, fb);
        assert_eq!(
            fa.element_order_histogram.iter().find(|e| e.0 == 2),
            Some(&(2usize, 5usize))
        );
        assert_eq!(
            fb.element_order_histogram.iter().find(|e| e.0 == 2),
            Some(&(2usize, 1usize))
        );
    }

    #[test]
    fn fingerprint_relabeling_invariance() {
        let g = build(GroupSpec::Semidihedral(16));
        let mut perm: Vec<u16> = (0..16).collect();
        perm[1..].rotate_left(5);
        let h = relabel(&g, &perm, &caps()).unwrap();
        assert_eq!(fingerprint(&g), fingerprint(&h));
    }

    #[test]
    fn s3_isomorphic_to_metacyclic() {
        let a = build(GroupSpec::Symmetric(3));
        let b = build(GroupSpec::Metacyclic { m: 3, n: 2, r: 2 });
        let w = is_isomorphic(&a, &b).expect("S3 is the metacyclic group of order 6");
        assert!(verify_witness(&a, &b, &w));
    }

    #[test]
    fn zp2_vs_zp_x_zp() {
        let a = build(GroupSpec::Cyclic(9));
        let b = build(GroupSpec::Abelian(vec![3, 3]));
        assert!(is_isomorphic(&a, &b).is_none());
    }

    #[test]
    fn identity_witness() {
        let g = build(GroupSpec::Dihedral(12));
        let w = is_isomorphic(&g, &g).unwrap();
        assert!(verify_witness(&g, &g, &w));
    }

    #[test]
    fn abelian_same_type_isomorphic() {
        let a = build(GroupSpec::Abelian(vec![4, 2]));
        let b = build(GroupSpec::Abelian(vec![2, 4]));
        assert!(is_isomorphic(&a, &b).is_some());
    }

    #[test]
    fn s3_subgroup_classes() {
        let g = build(GroupSpec::Symmetric(3));
        let l = enumerate_subgroups(&g, &caps()).unwrap();
        let groups: Vec<Group> = (0..l.len())
            .map(|i| subgroup_as_group(&l, i, &caps()).unwrap())
            .collect();
        let classes = partition_classes(&groups);
        assert_eq!(classes.len(), 4); // 1, Z2, Z3, S3
    }

    #[test]
    fn q8_subgroup_classes() {
        let g = build(GroupSpec::Dicyclic(8));
        let l = enumerate_subgroups(&g, &caps()).unwrap();
        let groups: Vec<Group> = (0..l.len())
            .map(|i| subgroup_as_group(&l, i, &caps()).unwrap())
            .collect();
        assert_eq!(partition_classes(&groups).len(), 4);
    }

    #[test]
    fn empty_partition() {
        assert!(partition_classes(&[]).is_empty());
    }

    #[test]
    fn partition_independent_of_input_order() {
        let specs = [
            GroupSpec::Cyclic(4),
            GroupSpec::Abelian(vec![2, 2]),
            GroupSpec::Cyclic(4),
            GroupSpec::Dihedral(8),
        ];
        let groups: Vec<Group> = specs.iter().map(|s| build(s.clone())).collect();
        let classes = partition_classes(&groups);
        assert_eq!(classes.len(), 3);
        assert!(classes.contains(&vec![0, 2]));
    }
}
