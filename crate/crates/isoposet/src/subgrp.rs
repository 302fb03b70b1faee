//! Exhaustive subgroup enumeration: L(G) as bit-vector membership sets with
//! inclusion order, Hasse edges, normality flags and conjugacy classes.
//!
//! Enumeration seeds with the cyclic subgroups and closes under pairwise
//! joins to a fixpoint; a naive subset scan is infeasible past order ~25.

use crate::bitset::BitSet;
use crate::error::Error;
use crate::group::{closure, Group};
use crate::{Caps, Result};
use std::collections::{BTreeSet, HashMap, HashSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSet {
    pub members: BitSet,
    pub order: usize,
}

#[derive(Clone)]
pub struct SubgroupLattice {
    pub parent: Group,
    /// Sorted by (order, bit-vector) for deterministic ids; id 0 is the
    /// trivial subgroup, the last id is G itself.
    pub subgroups: Vec<SubgroupSet>,
    /// up[i] = { j : subgroup i is contained in subgroup j }
    up: Vec<BitSet>,
    /// Cover edges (lower, upper).
    pub hasse: Vec<(usize, usize)>,
    pub normal_flags: Vec<bool>,
    pub conjugacy_class_ids: Vec<usize>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn num_conjugacy_classes(&self) -> usize {
        self.conjugacy_class_ids.iter().copied().max().unwrap_or(0) + 1
    }

    /// Subgroup orders that occur, deduplicated and sorted.
    pub fn orders(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.subgroups.iter().map(|s| s.order).collect();
        set.into_iter().collect()
    }
}

/// Enumerate every subgroup of `g`: seed with the distinct cyclic subgroups,
/// then join each known subgroup with each cyclic seed until nothing new
/// appears.
pub fn enumerate_subgroups(g: &Group, caps: &Caps) -> Result<SubgroupLattice> {
    let n = g.order();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut list: Vec<BitSet> = Vec::new();

    let trivial = BitSet::from_elems(n, [Group::IDENTITY as usize]);
    seen.insert(trivial.clone());
    list.push(trivial);

    let mut cyclic: Vec<BitSet> = Vec::new();
    for a in g.elements() {
        let c = closure(g, [a]);
        if seen.insert(c.clone()) {
            list.push(c.clone());
            cyclic.push(c);
        }
    }

    // join-closure fixpoint
    let mut frontier = 0usize;
    while frontier < list.len() {
        let h = list[frontier].clone();
        for c in &cyclic {
            if c.is_subset(&h) {
                continue;
            }
            let joined = closure(g, h.union(c).iter().map(|i| i as u16));
            if seen.insert(joined.clone()) {
                if list.len() >= caps.subgroup_cap {
                    return Err(Error::SubgroupCountCapExceeded {
                        cap: caps.subgroup_cap,
                    });
                }
                list.push(joined);
            }
        }
        frontier += 1;
    }

    // deterministic ids
    let mut subgroups: Vec<SubgroupSet> = list
        .into_iter()
        .map(|members| SubgroupSet {
            order: members.count(),
            members,
        })
        .collect();
    subgroups.sort_by(|a, b| (a.order, &a.members).cmp(&(b.order, &b.members)));

    // Lagrange, asserted not assumed
    for s in &subgroups {
        assert_eq!(n % s.order, 0, "subgroup order must divide the group order");
    }

    let count = subgroups.len();
    let (up, hasse) = inclusion_structure(&subgroups);

    // normality and conjugacy classes
    let index: HashMap<&BitSet, usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (&s.members, i))
        .collect();
    let mut normal_flags = vec![false; count];
    let mut conjugacy_class_ids = vec![usize::MAX; count];
    let mut next_class = 0usize;
    for i in 0..count {
        if conjugacy_class_ids[i] != usize::MAX {
            continue;
        }
        let mut orbit: Vec<usize> = vec![i];
        conjugacy_class_ids[i] = next_class;
        let mut k = 0;
        while k < orbit.len() {
            let h = orbit[k];
            for a in g.elements() {
                let conj = BitSet::from_elems(
                    n,
                    subgroups[h]
                        .members
                        .iter()
                        .map(|m| g.conjugate(a, m as u16) as usize),
                );
                let j = *index
                    .get(&conj)
                    .expect("conjugate of a subgroup is a subgroup in the list");
                if conjugacy_class_ids[j] == usize::MAX {
                    conjugacy_class_ids[j] = next_class;
                    orbit.push(j);
                }
            }
            k += 1;
        }
        let is_normal = orbit.len() == 1;
        for &j in &orbit {
            normal_flags[j] = is_normal;
        }
        next_class += 1;
    }

    Ok(SubgroupLattice {
        parent: g.clone(),
        subgroups,
        up,
        hasse,
        normal_flags,
        conjugacy_class_ids,
    })
}

/// Inclusion bitsets and Hasse edges (transitive reduction) for a sorted
/// subgroup list.
fn inclusion_structure(subgroups: &[SubgroupSet]) -> (Vec<BitSet>, Vec<(usize, usize)>) {
    let count = subgroups.len();
    let mut up = vec![BitSet::new(count); count];
    for i in 0..count {
        for j in 0..count {
            if subgroups[i].order <= subgroups[j].order
                && subgroups[i].members.is_subset(&subgroups[j].members)
            {
                up[i].insert(j);
            }
        }
    }

    // Hasse edges: for each j, the maximal proper subgroups below it.
    let mut hasse = Vec::new();
    for j in 0..count {
        let below: Vec<usize> = (0..count).filter(|&i| i != j && up[i].contains(j)).collect();
        // scan in decreasing order; keep elements not under an accepted one
        let mut accepted: Vec<usize> = Vec::new();
        for &i in below.iter().rev() {
            if !accepted.iter().any(|&m| up[i].contains(m)) {
                accepted.push(i);
            }
        }
        for i in accepted {
            hasse.push((i, j));
        }
    }
    hasse.sort_unstable();
    (up, hasse)
}

/// Reassemble a lattice from stored parts (cache load path). Inclusion and
/// Hasse structure are recomputed; the member sets are validated as actual
/// subgroups in the expected sorted order.
pub fn lattice_from_parts(
    parent: Group,
    members: Vec<BitSet>,
    normal_flags: Vec<bool>,
    conjugacy_class_ids: Vec<usize>,
) -> Result<SubgroupLattice> {
    let n = parent.order();
    if members.is_empty()
        || members.len() != normal_flags.len()
        || members.len() != conjugacy_class_ids.len()
    {
        return Err(Error::CorruptEntry("inconsistent lattice part lengths".into()));
    }
    let subgroups: Vec<SubgroupSet> = members
        .into_iter()
        .map(|members| SubgroupSet {
            order: members.count(),
            members,
        })
        .collect();
    for w in subgroups.windows(2) {
        if (w[0].order, &w[0].members) >= (w[1].order, &w[1].members) {
            return Err(Error::CorruptEntry("subgroups out of order".into()));
        }
    }
    for s in &subgroups {
        if s.members.len() != n
            || !s.members.contains(Group::IDENTITY as usize)
            || !n.is_multiple_of(s.order)
        {
            return Err(Error::CorruptEntry("invalid subgroup member set".into()));
        }
        let elems: Vec<u16> = s.members.iter().map(|i| i as u16).collect();
        let closed = elems
            .iter()
            .all(|&a| elems.iter().all(|&b| s.members.contains(parent.mul(a, b) as usize)));
        if !closed {
            return Err(Error::CorruptEntry("member set not closed".into()));
        }
    }
    if subgroups[0].order != 1 || subgroups[subgroups.len() - 1].order != n {
        return Err(Error::CorruptEntry("missing trivial or full subgroup".into()));
    }
    let (up, hasse) = inclusion_structure(&subgroups);
    Ok(SubgroupLattice {
        parent,
        subgroups,
        up,
        hasse,
        normal_flags,
        conjugacy_class_ids,
    })
}

/// Frattini subgroup id, CLT flag, Jordan-Dedekind flag and the minimal
/// normal subgroup ids of a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMeta {
    pub frattini_id: usize,
    pub is_clt: bool,
    pub jordan_dedekind: bool,
    pub minimal_normal_ids: Vec<usize>,
}

pub fn lattice_meta(l: &SubgroupLattice) -> LatticeMeta {
    let n = l.parent.order();
    let top = l.top();
    // Frattini: intersection of the maximal subgroups (= G when none exist)
    let maximal: Vec<usize> = l
        .hasse
        .iter()
        .filter(|&&(_, b)| b == top)
        .map(|&(a, _)| a)
        .collect();
    let frattini_members = maximal.iter().fold(
        l.subgroups[top].members.clone(),
        |acc, &i| acc.intersection(&l.subgroups[i].members),
    );
    let frattini_id = l
        .subgroups
        .iter()
        .position(|s| s.members == frattini_members)
        .expect("intersection of subgroups is a subgroup");

    let orders: BTreeSet<usize> = l.subgroups.iter().map(|s| s.order).collect();
    let divisors: BTreeSet<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let is_clt = orders == divisors;

    // Jordan-Dedekind: a rank function consistent with every cover edge exists
    let jordan_dedekind = {
        let mut rank = vec![usize::MAX; l.len()];
        rank[0] = 0;
        let mut order_ids: Vec<usize> = (0..l.len()).collect();
        order_ids.sort_by_key(|&i| l.subgroups[i].order);
        let mut ok = true;
        'jd: for &j in &order_ids {
            for &(a, b) in &l.hasse {
                if b == j {
                    let r = rank[a].checked_add(1).unwrap();
                    if rank[j] == usize::MAX {
                        rank[j] = r;
                    } else if rank[j] != r {
                        ok = false;
                        break 'jd;
                    }
                }
            }
        }
        ok
    };

    // minimal normal subgroups: atoms of the normal subposet
    let normal_ids: Vec<usize> = (1..l.len()).filter(|&i| l.normal_flags[i]).collect();
    let minimal_normal_ids: Vec<usize> = normal_ids
        .iter()
        .copied()
        .filter(|&i| {
            !normal_ids
                .iter()
                .any(|&j| j != i && l.leq(j, i))
        })
        .collect();

    LatticeMeta {
        frattini_id,
        is_clt,
        jordan_dedekind,
        minimal_normal_ids,
    }
}

/// Materialize a subgroup as a group in its own right: the parent table
/// restricted and reindexed, identity at 0.
pub fn subgroup_as_group(l: &SubgroupLattice, id: usize, caps: &Caps) -> Result<Group> {
    let g = &l.parent;
    let members: Vec<u16> = l.subgroups[id].members.iter().map(|i| i as u16).collect();
    debug_assert_eq!(members[0], Group::IDENTITY);
    let mut local = HashMap::new();
    for (k, &m) in members.iter().enumerate() {
        local.insert(m, k as u16);
    }
    let k = members.len();
    let mut table = vec![0u16; k * k];
    for a in 0..k {
        for b in 0..k {
            table[a * k + b] = local[&g.mul(members[a], members[b])];
        }
    }
    let names = members
        .iter()
        .map(|&m| g.element_names[m as usize].clone())
        .collect();
    Group::from_table(table, None, names, caps)
}
