//! Versioned JSON layout for lattices and Iso posets, with sha256 digests
//! over the canonical serialization.

use crate::bitset::BitSet;
use crate::error::Error;
use crate::group::Group;
use crate::iso::{build_iso_poset, IsoPoset};
use crate::poset::Poset;
use crate::subgrp::{lattice_from_parts, SubgroupLattice};
use crate::{Caps, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;

/// Serialized poset: labels plus the order matrix as one hex bit-row per
/// element (row i = the up-set of i).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PosetRepr {
    pub size: usize,
    pub labels: Vec<String>,
    pub up_rows: Vec<String>,
    pub hasse: Vec<(usize, usize)>,
}

pub fn poset_repr(p: &Poset) -> PosetRepr {
    let up_rows = (0..p.size())
        .map(|i| BitSet::from_elems(p.size(), (0..p.size()).filter(|&j| p.leq(i, j))).to_hex())
        .collect();
    PosetRepr {
        size: p.size(),
        labels: p.labels.clone(),
        up_rows,
        hasse: p.hasse.clone(),
    }
}

pub fn poset_from_repr(r: &PosetRepr) -> Result<Poset> {
    if r.labels.len() != r.size || r.up_rows.len() != r.size {
        return Err(Error::CorruptEntry("poset size mismatch".into()));
    }
    let rows: Vec<BitSet> = r
        .up_rows
        .iter()
        .map(|h| {
            BitSet::from_hex(r.size, h)
                .ok_or_else(|| Error::CorruptEntry("bad hex bit-row".into()))
        })
        .collect::<Result<_>>()?;
    let p = Poset::new(r.labels.clone(), |i, j| rows[i].contains(j))?;
    if p.hasse != r.hasse {
        return Err(Error::CorruptEntry("hasse edges disagree with order".into()));
    }
    Ok(p)
}

/// Stable digest of a poset up to nothing: labels, order and covers all
/// contribute.
pub fn poset_digest(p: &Poset) -> String {
    digest(&poset_repr(p))
}

/// Digest of any serializable value over its canonical JSON bytes.
pub fn digest<T: Serialize>(value: &T) -> String {
    let json = serde_json::to_string(value).expect("serializable value");
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Complete serialized analysis of one group: its table, subgroup lattice
/// and Iso poset.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnalysisRepr {
    pub version: u32,
    pub spec: String,
    pub order: usize,
    pub element_names: Vec<String>,
    pub table: Vec<u16>,
    /// Subgroup member sets as hex bit-vectors, in id order.
    pub subgroups: Vec<String>,
    pub normal_flags: Vec<bool>,
    pub conjugacy_class_ids: Vec<usize>,
    pub iso_classes: Vec<Vec<usize>>,
    pub iso_poset: PosetRepr,
}

pub fn analysis_repr(l: &SubgroupLattice, ip: &IsoPoset) -> AnalysisRepr {
    AnalysisRepr {
        version: FORMAT_VERSION,
        spec: l
            .parent
            .spec
            .as_ref()
            .map(|s| s.to_string())
            .unwrap_or_default(),
        order: l.parent.order(),
        element_names: l.parent.element_names.clone(),
        table: l.parent.table().to_vec(),
        subgroups: l.subgroups.iter().map(|s| s.members.to_hex()).collect(),
        normal_flags: l.normal_flags.clone(),
        conjugacy_class_ids: l.conjugacy_class_ids.clone(),
        iso_classes: ip.classes.clone(),
        iso_poset: poset_repr(&ip.poset),
    }
}

pub fn analysis_from_repr(r: &AnalysisRepr, caps: &Caps) -> Result<(SubgroupLattice, IsoPoset)> {
    if r.version != FORMAT_VERSION {
        return Err(Error::CorruptEntry(format!(
            "format version {} (expected {FORMAT_VERSION})",
            r.version
        )));
    }
    if r.element_names.len() != r.order || r.table.len() != r.order * r.order {
        return Err(Error::CorruptEntry("table size mismatch".into()));
    }
    let spec = if r.spec.is_empty() {
        None
    } else {
        crate::expr::parse_group_expr(&r.spec).ok()
    };
    let parent = Group::from_table(r.table.clone(), spec, r.element_names.clone(), caps)
        .map_err(|e| Error::CorruptEntry(format!("stored table invalid: {e}")))?;
    let members: Vec<BitSet> = r
        .subgroups
        .iter()
        .map(|h| {
            BitSet::from_hex(r.order, h)
                .ok_or_else(|| Error::CorruptEntry("bad subgroup hex".into()))
        })
        .collect::<Result<_>>()?;
    let lattice = lattice_from_parts(
        parent,
        members,
        r.normal_flags.clone(),
        r.conjugacy_class_ids.clone(),
    )?;
    let ip = build_iso_poset(&lattice, caps)?;
    // the freshly built Iso poset must agree with what was stored
    if ip.classes != r.iso_classes || poset_repr(&ip.poset) != r.iso_poset {
        return Err(Error::CorruptEntry("stored Iso poset disagrees".into()));
    }
    Ok((lattice, ip))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct, GroupSpec};
    use crate::subgrp::enumerate_subgroups;

    fn analyze(spec: GroupSpec) -> (SubgroupLattice, IsoPoset) {
        let caps = Caps::default();
        let g = construct(&spec, &caps).unwrap();
        let l = enumerate_subgroups(&g, &caps).unwrap();
        let ip = build_iso_poset(&l, &caps).unwrap();
        (l, ip)
    }

    #[test]
    fn poset_round_trip() {
        let p = crate::poset::pentagon();
        let r = poset_repr(&p);
        let q = poset_from_repr(&r).unwrap();
        assert_eq!(poset_digest(&p), poset_digest(&q));
    }

    #[test]
    fn analysis_round_trip() {
        let caps = Caps::default();
        let (l, ip) = analyze(GroupSpec::Dihedral(12));
        let r = analysis_repr(&l, &ip);
        let json = serde_json::to_string(&r).unwrap();
        let back: AnalysisRepr = serde_json::from_str(&json).unwrap();
        let (l2, ip2) = analysis_from_repr(&back, &caps).unwrap();
        assert_eq!(l2.len(), l.len());
        assert_eq!(poset_digest(&ip2.poset), poset_digest(&ip.poset));
        assert_eq!(digest(&analysis_repr(&l2, &ip2)), digest(&r));
    }

    #[test]
    fn version_bump_rejected() {
        let caps = Caps::default();
        let (l, ip) = analyze(GroupSpec::Cyclic(6));
        let mut r = analysis_repr(&l, &ip);
        r.version += 1;
        assert!(matches!(
            analysis_from_repr(&r, &caps),
            Err(Error::CorruptEntry(_))
        ));
    }

    #[test]
    fn tampered_subgroups_rejected() {
        let caps = Caps::default();
        let (l, ip) = analyze(GroupSpec::Cyclic(6));
        let mut r = analysis_repr(&l, &ip);
        r.subgroups.pop();
        assert!(analysis_from_repr(&r, &caps).is_err());
    }

    #[test]
    fn digest_is_stable() {
        let (l, ip) = analyze(GroupSpec::Dicyclic(8));
        let (l2, ip2) = analyze(GroupSpec::Dicyclic(8));
        assert_eq!(digest(&analysis_repr(&l, &ip)), digest(&analysis_repr(&l2, &ip2)));
    }
}
