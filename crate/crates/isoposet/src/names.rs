//! Human-readable names for small groups: abelian invariant factors, the
//! standard nonabelian families, optional extra candidates (catalog entries),
//! and a deterministic fingerprint-based fallback.

use crate::group::{construct, factorize, invariants, Group, GroupSpec};
use crate::grpiso::{fingerprint, is_isomorphic};
use crate::Caps;

/// Family candidates of the given order, in preference order.
fn family_candidates(order: usize) -> Vec<(String, GroupSpec)> {
    let mut out = Vec::new();
    let n = order as u32;
    if order == 6 {
        out.push(("S3".into(), GroupSpec::Symmetric(3)));
    }
    if order == 24 {
        out.push(("S4".into(), GroupSpec::Symmetric(4)));
    }
    if order == 120 {
        out.push(("S5".into(), GroupSpec::Symmetric(5)));
    }
    if order == 12 {
        out.push(("A4".into(), GroupSpec::Alternating(4)));
    }
    if order == 60 {
        out.push(("A5".into(), GroupSpec::Alternating(5)));
    }
    if order >= 6 && order.is_multiple_of(2) {
        out.push((format!("D{n}"), GroupSpec::Dihedral(n)));
    }
    if order >= 8 && order.is_multiple_of(4) {
        out.push((format!("Q{n}"), GroupSpec::Dicyclic(n)));
    }
    if order >= 16 && order.is_power_of_two() {
        out.push((format!("SD{n}"), GroupSpec::Semidihedral(n)));
    }
    let factors = factorize(order as u64);
    if factors.len() == 1 {
        let (p, a) = factors[0];
        if a == 3 && p > 2 {
            out.push((format!("Heis({p})"), GroupSpec::Heisenberg(p as u32)));
        }
        // modular maximal-cyclic group M(p^a)
        if (p > 2 && a >= 3) || (p == 2 && a >= 4) {
            let m = p.pow(a - 1) as u32;
            let r = (1 + p.pow(a - 2)) as u32;
            out.push((
                format!("M{order}"),
                GroupSpec::Metacyclic { m, n: p as u32, r },
            ));
        }
    }
    out
}

/// Name a group, consulting extra named candidates (e.g. catalog entries of
/// the same order) before falling back to `grp(order,#hash)`.
pub fn name_group_with(g: &Group, caps: &Caps, extra: &[(String, Group)]) -> String {
    if g.order() == 1 {
        return "1".into();
    }
    let inv = invariants(g);
    if let Some(t) = &inv.abelian_type {
        return t.to_string();
    }
    for (label, spec) in family_candidates(g.order()) {
        if let Ok(candidate) = construct(&spec, caps) {
            if is_isomorphic(g, &candidate).is_some() {
                return label;
            }
        }
    }
    for (label, candidate) in extra {
        if candidate.order() == g.order() && is_isomorphic(g, candidate).is_some() {
            return label.clone();
        }
    }
    format!("grp({},#{})", g.order(), fingerprint(g).short_hash())
}

pub fn name_group(g: &Group, caps: &Caps) -> String {
    name_group_with(g, caps, &[])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(spec: GroupSpec) -> Group {
        construct(&spec, &Caps::default()).unwrap()
    }

    #[test]
    fn abelian_names() {
        assert_eq!(name_group(&build(GroupSpec::Cyclic(1)), &Caps::default()), "1");
        assert_eq!(name_group(&build(GroupSpec::Cyclic(12)), &Caps::default()), "Z12");
        assert_eq!(
            name_group(&build(GroupSpec::Abelian(vec![2, 2])), &Caps::default()),
            "Z2xZ2"
        );
        assert_eq!(
            name_group(&build(GroupSpec::Abelian(vec![3, 6])), &Caps::default()),
            "Z6xZ3"
        );
    }

    #[test]
    fn family_names() {
        let caps = Caps::default();
        assert_eq!(name_group(&build(GroupSpec::Symmetric(3)), &caps), "S3");
        assert_eq!(name_group(&build(GroupSpec::Dihedral(8)), &caps), "D8");
        assert_eq!(name_group(&build(GroupSpec::Dicyclic(8)), &caps), "Q8");
        assert_eq!(name_group(&build(GroupSpec::Alternating(4)), &caps), "A4");
        assert_eq!(
            name_group(&build(GroupSpec::Semidihedral(16)), &caps),
            "SD16"
        );
        assert_eq!(name_group(&build(GroupSpec::Heisenberg(3)), &caps), "Heis(3)");
        assert_eq!(
            name_group(
                &build(GroupSpec::Metacyclic { m: 9, n: 3, r: 4 }),
                &caps
            ),
            "M27"
        );
    }

    #[test]
    fn metacyclic_s3_named_as_s3() {
        let g = build(GroupSpec::Metacyclic { m: 3, n: 2, r: 2 });
        assert_eq!(name_group(&g, &Caps::default()), "S3");
    }

    #[test]
    fn fallback_is_deterministic() {
        let caps = Caps::default();
        // a group outside the named families: Z3 x S3
        let g = build(GroupSpec::Product(vec![
            GroupSpec::Cyclic(3),
            GroupSpec::Symmetric(3),
        ]));
        let a = name_group(&g, &caps);
        let b = name_group(&g, &caps);
        assert_eq!(a, b);
        assert!(a.starts_with("grp(18,#"));
        let extra = vec![("Z3xS3".to_string(), g.clone())];
        assert_eq!(name_group_with(&g, &caps, &extra), "Z3xS3");
    }
}
