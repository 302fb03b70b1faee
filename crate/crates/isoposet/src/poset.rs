//! Finite posets with the order-theoretic toolkit: lattice, chain, modular,
//! distributive and complementation checks, N5/M3 sublattice search, products
//! and poset isomorphism.

use crate::bitset::BitSet;
use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};

/// A finite poset given by its full order matrix.
#[derive(Clone, Debug)]
pub struct Poset {
    size: usize,
    pub labels: Vec<String>,
    /// up[i] = { j : i <= j }
    up: Vec<BitSet>,
    /// down[i] = { j : j <= i }
    down: Vec<BitSet>,
    /// Cover edges (lower, upper): the transitive reduction of the order.
    pub hasse: Vec<(usize, usize)>,
}

impl Poset {
    /// Build a poset from a relation, asserting that it actually is a
    /// partial order (reflexive, antisymmetric, transitive).
    pub fn new(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        let size = labels.len();
        let mut up = vec![BitSet::new(size); size];
        let mut down = vec![BitSet::new(size); size];
        for i in 0..size {
            for j in 0..size {
                if leq(i, j) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        for i in 0..size {
            if !up[i].contains(i) {
                return Err(Error::Internal(format!("order not reflexive at {i}")));
            }
            for j in up[i].iter() {
                if i != j && up[j].contains(i) {
                    return Err(Error::Internal(format!(
                        "order not antisymmetric at ({i},{j})"
                    )));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::Internal(format!(
                        "order not transitive at ({i},{j})"
                    )));
                }
            }
        }
        let mut hasse = Vec::new();
        for i in 0..size {
            for j in up[i].iter() {
                if i == j {
                    continue;
                }
                // cover: nothing strictly between i and j
                let between = up[i].intersection(&down[j]);
                if between.count() == 2 {
                    hasse.push((i, j));
                }
            }
        }
        hasse.sort_unstable();
        Ok(Poset {
            size,
            labels,
            up,
            down,
            hasse,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// A chain with `k` elements (height `k - 1`).
    pub fn chain(k: usize) -> Poset {
        Poset::new((0..k).map(|i| i.to_string()).collect(), |a, b| a <= b)
            .expect("total order is a poset")
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.size).find(|&i| self.down[i].count() == 1)
            .filter(|&i| self.up[i].count() == self.size)
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.size).find(|&i| self.up[i].count() == 1)
            .filter(|&i| self.down[i].count() == self.size)
    }

    /// Greatest lower bound, when it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower = self.down[a].intersection(&self.down[b]);
        let candidates: Vec<usize> = lower.iter().collect();
        candidates
            .into_iter()
            .find(|&m| lower.is_subset(&self.down[m]))
    }

    /// Least upper bound, when it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let upper = self.up[a].intersection(&self.up[b]);
        let candidates: Vec<usize> = upper.iter().collect();
        candidates
            .into_iter()
            .find(|&m| upper.is_subset(&self.up[m]))
    }

    /// Length (edge count) of the longest chain.
    pub fn height(&self) -> usize {
        let order = self.topo_order();
        let mut depth = vec![0usize; self.size];
        for &i in &order {
            for &(a, b) in &self.hasse {
                if a == i {
                    depth[b] = depth[b].max(depth[i] + 1);
                }
            }
        }
        depth.into_iter().max().unwrap_or(0)
    }

    /// Elements sorted so that smaller elements come first.
    fn topo_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.size).collect();
        idx.sort_by_key(|&i| self.down[i].count());
        idx
    }

    /// Component-wise order on pairs.
    pub fn product(&self, other: &Poset) -> Result<Poset> {
        let n2 = other.size;
        let labels = (0..self.size)
            .flat_map(|i| (0..n2).map(move |j| (i, j)))
            .map(|(i, j)| format!("({},{})", self.labels[i], other.labels[j]))
            .collect();
        Poset::new(labels, |a, b| {
            self.leq(a / n2, b / n2) && other.leq(a % n2, b % n2)
        })
    }

    /// Induced subposet on the given elements (in the given order).
    pub fn induced(&self, elems: &[usize]) -> Result<Poset> {
        let labels = elems.iter().map(|&i| self.labels[i].clone()).collect();
        Poset::new(labels, |a, b| self.leq(elems[a], elems[b]))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size).all(|a| (0..a).all(|b| self.comparable(a, b)))
    }
}

/// Order-theoretic property flags with concrete witnesses for every failure.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PropertyReport {
    pub is_lattice: bool,
    pub is_chain: bool,
    pub is_modular: bool,
    pub is_distributive: bool,
    pub is_complemented: bool,
    /// Length (edge count) of the longest chain.
    pub height: usize,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// Pair with no greatest lower bound.
    NoMeet(usize, usize),
    /// Pair with no least upper bound.
    NoJoin(usize, usize),
    /// Incomparable pair (chain failure).
    Incomparable(usize, usize),
    /// Triple (a,b,c) with a <= c violating a v (b ^ c) = (a v b) ^ c.
    ModularTriple(usize, usize, usize),
    /// Triple violating a ^ (b v c) = (a ^ b) v (a ^ c).
    DistributiveTriple(usize, usize, usize),
    /// Element with no complement.
    NoComplement(usize),
}

impl PropertyReport {
    /// is_chain => is_distributive => is_modular => is_lattice;
    /// is_complemented => is_lattice.
    pub fn implication_chain_holds(&self) -> bool {
        (!self.is_chain || self.is_distributive)
            && (!self.is_distributive || self.is_modular)
            && (!self.is_modular || self.is_lattice)
            && (!self.is_complemented || self.is_lattice)
    }
}

/// Re-check a witness against the order matrix.
pub fn validate_witness(p: &Poset, w: &Witness) -> bool {
    match *w {
        Witness::NoMeet(a, b) => p.meet(a, b).is_none(),
        Witness::NoJoin(a, b) => p.join(a, b).is_none(),
        Witness::Incomparable(a, b) => !p.comparable(a, b),
        Witness::ModularTriple(a, b, c) => {
            p.leq(a, c)
                && match (p.meet(b, c), p.join(a, b)) {
                    (Some(bc), Some(ab)) => p.join(a, bc) != p.meet(ab, c),
                    _ => false,
                }
        }
        Witness::DistributiveTriple(a, b, c) => match (p.join(b, c), p.meet(a, b), p.meet(a, c)) {
            (Some(bvc), Some(ab), Some(ac)) => p.meet(a, bvc) != p.join(ab, ac),
            _ => false,
        },
        Witness::NoComplement(x) => {
            let (bot, top) = match (p.bottom(), p.top()) {
                (Some(b), Some(t)) => (b, t),
                _ => return false,
            };
            !(0..p.size()).any(|y| p.meet(x, y) == Some(bot) && p.join(x, y) == Some(top))
        }
    }
}

/// Decide the lattice properties of a bounded poset.
pub fn properties(p: &Poset) -> Result<PropertyReport> {
    let n = p.size();
    let (_bot, _top) = match (p.bottom(), p.top()) {
        (Some(b), Some(t)) => (b, t),
        _ => return Err(Error::NotBounded),
    };
    let mut witnesses = Vec::new();

    let mut meets = vec![None; n * n];
    let mut joins = vec![None; n * n];
    let mut lattice_witness = None;
    'outer: for a in 0..n {
        for b in 0..n {
            meets[a * n + b] = p.meet(a, b);
            joins[a * n + b] = p.join(a, b);
            if lattice_witness.is_none() {
                if meets[a * n + b].is_none() {
                    lattice_witness = Some(Witness::NoMeet(a, b));
                } else if joins[a * n + b].is_none() {
                    lattice_witness = Some(Witness::NoJoin(a, b));
                }
                if lattice_witness.is_some() && a < b {
                    // keep filling tables is pointless once a failure is found
                    break 'outer;
                }
            }
        }
    }
    let is_lattice = lattice_witness.is_none();
    if let Some(w) = lattice_witness {
        witnesses.push(w);
    }

    let mut is_chain = true;
    'chain: for a in 0..n {
        for b in 0..a {
            if !p.comparable(a, b) {
                is_chain = false;
                witnesses.push(Witness::Incomparable(b, a));
                break 'chain;
            }
        }
    }

    let (mut is_modular, mut is_distributive, mut is_complemented) = (false, false, false);
    if is_lattice {
        let meet = |a: usize, b: usize| meets[a * n + b].unwrap();
        let join = |a: usize, b: usize| joins[a * n + b].unwrap();
        is_modular = true;
        'modular: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if p.leq(a, c) && join(a, meet(b, c)) != meet(join(a, b), c) {
                        is_modular = false;
                        witnesses.push(Witness::ModularTriple(a, b, c));
                        break 'modular;
                    }
                }
            }
        }
        is_distributive = true;
        'distrib: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if meet(a, join(b, c)) != join(meet(a, b), meet(a, c)) {
                        is_distributive = false;
                        witnesses.push(Witness::DistributiveTriple(a, b, c));
                        break 'distrib;
                    }
                }
            }
        }
        let bot = p.bottom().unwrap();
        let top = p.top().unwrap();
        is_complemented = true;
        for x in 0..n {
            if !(0..n).any(|y| meet(x, y) == bot && join(x, y) == top) {
                is_complemented = false;
                witnesses.push(Witness::NoComplement(x));
                break;
            }
        }
    }

    let report = PropertyReport {
        is_lattice,
        is_chain,
        is_modular,
        is_distributive,
        is_complemented,
        height: p.height(),
        witnesses,
    };
    debug_assert!(report.implication_chain_holds());
    debug_assert!(report.witnesses.iter().all(|w| validate_witness(p, w)));
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SublatticeShape {
    /// The pentagon: 0 < a < b < 1 with c incomparable to a and b.
    N5,
    /// The diamond: three pairwise-incomparable atoms between bottom and top.
    M3,
}

/// Search for a five-element sublattice of the given shape. Returns the
/// elements as (bottom, a, b, c, top); for N5 the chain side is a < b.
pub fn find_sublattice(p: &Poset, shape: SublatticeShape) -> Result<Option<[usize; 5]>> {
    let n = p.size();
    let mut meets = vec![0usize; n * n];
    let mut joins = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            meets[a * n + b] = p.meet(a, b).ok_or(Error::NotALattice)?;
            joins[a * n + b] = p.join(a, b).ok_or(Error::NotALattice)?;
        }
    }
    let meet = |a: usize, b: usize| meets[a * n + b];
    let join = |a: usize, b: usize| joins[a * n + b];
    match shape {
        SublatticeShape::N5 => {
            for a in 0..n {
                for b in 0..n {
                    if a == b || !p.leq(a, b) {
                        continue;
                    }
                    for c in 0..n {
                        if p.comparable(c, a) || p.comparable(c, b) {
                            continue;
                        }
                        let z = meet(a, c);
                        let t = join(a, c);
                        if meet(b, c) == z && join(b, c) == t {
                            return Ok(Some([z, a, b, c, t]));
                        }
                    }
                }
            }
            Ok(None)
        }
        SublatticeShape::M3 => {
            for a in 0..n {
                for b in a + 1..n {
                    if p.comparable(a, b) {
                        continue;
                    }
                    let z = meet(a, b);
                    let t = join(a, b);
                    for c in b + 1..n {
                        if p.comparable(c, a) || p.comparable(c, b) {
                            continue;
                        }
                        if meet(a, c) == z && meet(b, c) == z && join(a, c) == t && join(b, c) == t
                        {
                            return Ok(Some([z, a, b, c, t]));
                        }
                    }
                }
            }
            Ok(None)
        }
    }
}

/// Decide poset isomorphism by backtracking with degree/rank pruning.
/// Returns a bijection `p1 -> p2` preserving order both ways, when one exists.
pub fn poset_isomorphic(p1: &Poset, p2: &Poset) -> Option<Vec<usize>> {
    let n = p1.size();
    if n != p2.size() {
        return None;
    }
    let inv = |p: &Poset| -> Vec<(usize, usize, usize, usize)> {
        (0..n)
            .map(|i| {
                let upd = p.hasse.iter().filter(|&&(a, _)| a == i).count();
                let dnd = p.hasse.iter().filter(|&&(_, b)| b == i).count();
                (p.down[i].count(), p.up[i].count(), dnd, upd)
            })
            .collect()
    };
    let inv1 = inv(p1);
    let inv2 = inv(p2);
    {
        let mut a = inv1.clone();
        let mut b = inv2.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    // process rarest invariants first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| {
        (
            inv2.iter().filter(|&&v| v == inv1[i]).count(),
            std::cmp::Reverse(inv1[i].0 + inv1[i].1),
            i,
        )
    });
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn backtrack(
        k: usize,
        order: &[usize],
        p1: &Poset,
        p2: &Poset,
        inv1: &[(usize, usize, usize, usize)],
        inv2: &[(usize, usize, usize, usize)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let a = order[k];
        for b in 0..p2.size() {
            if used[b] || inv1[a] != inv2[b] {
                continue;
            }
            let consistent = order[..k].iter().all(|&a2| {
                let b2 = map[a2];
                p1.leq(a, a2) == p2.leq(b, b2) && p1.leq(a2, a) == p2.leq(b2, b)
            });
            if !consistent {
                continue;
            }
            map[a] = b;
            used[b] = true;
            if backtrack(k + 1, order, p1, p2, inv1, inv2, map, used) {
                return true;
            }
            map[a] = usize::MAX;
            used[b] = false;
        }
        false
    }
    if backtrack(0, &order, p1, p2, &inv1, &inv2, &mut map, &mut used) {
        // verify the witness preserves order both ways
        for a in 0..n {
            for b in 0..n {
                assert_eq!(p1.leq(a, b), p2.leq(map[a], map[b]));
            }
        }
        Some(map)
    } else {
        None
    }
}

/// The pentagon N5 as an explicit poset: z < a < b < t, z < c < t.
pub fn pentagon() -> Poset {
    let rel = [
        [true, true, true, true, true],
        [false, true, true, false, true],
        [false, false, true, false, true],
        [false, false, false, true, true],
        [false, false, false, false, true],
    ];
    Poset::new(
        vec!["0".into(), "a".into(), "b".into(), "c".into(), "1".into()],
        |i, j| rel[i][j],
    )
    .expect("N5 is a poset")
}

/// The diamond M3 as an explicit poset.
pub fn diamond() -> Poset {
    Poset::new(
        vec!["0".into(), "a".into(), "b".into(), "c".into(), "1".into()],
        |i, j| i == j || i == 0 || j == 4,
    )
    .expect("M3 is a poset")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_properties() {
        let c = Poset::chain(4);
        let r = properties(&c).unwrap();
        assert!(r.is_lattice && r.is_chain && r.is_modular && r.is_distributive);
        assert!(r.is_complemented == false || c.size() <= 2);
        assert_eq!(r.height, 3);
        assert!(r.witnesses.iter().all(|w| validate_witness(&c, w)));
    }

    #[test]
    fn two_chain_is_complemented() {
        let r = properties(&Poset::chain(2)).unwrap();
        assert!(r.is_complemented);
    }

    #[test]
    fn pentagon_not_modular() {
        let p = pentagon();
        let r = properties(&p).unwrap();
        assert!(r.is_lattice && !r.is_modular && !r.is_distributive);
        assert!(r.implication_chain_holds());
        let w = find_sublattice(&p, SublatticeShape::N5).unwrap();
        assert!(w.is_some());
        assert!(find_sublattice(&p, SublatticeShape::M3).unwrap().is_none());
    }

    #[test]
    fn diamond_modular_not_distributive() {
        let p = diamond();
        let r = properties(&p).unwrap();
        assert!(r.is_lattice && r.is_modular && !r.is_distributive);
        assert!(r.is_complemented);
        let w = find_sublattice(&p, SublatticeShape::M3).unwrap();
        assert_eq!(w, Some([0, 1, 2, 3, 4]));
    }

    #[test]
    fn chain_has_no_forbidden_sublattice() {
        let c = Poset::chain(6);
        assert!(find_sublattice(&c, SublatticeShape::N5).unwrap().is_none());
        assert!(find_sublattice(&c, SublatticeShape::M3).unwrap().is_none());
    }

    #[test]
    fn grid_product() {
        let g = Poset::chain(2).product(&Poset::chain(2)).unwrap();
        assert_eq!(g.size(), 4);
        let r = properties(&g).unwrap();
        assert!(r.is_lattice && r.is_distributive && !r.is_chain);
        assert_eq!(r.height, 2);
        assert_eq!(g.hasse.len(), 4);
    }

    #[test]
    fn product_with_singleton() {
        let p = pentagon();
        let q = p.product(&Poset::chain(1)).unwrap();
        assert!(poset_isomorphic(&p, &q).is_some());
    }

    #[test]
    fn grids_of_different_shape() {
        let a = Poset::chain(2).product(&Poset::chain(3)).unwrap();
        let b = Poset::chain(3).product(&Poset::chain(2)).unwrap();
        assert!(poset_isomorphic(&a, &b).is_some());
        assert!(poset_isomorphic(&a, &Poset::chain(6)).is_none());
    }

    #[test]
    fn pentagon_vs_diamond() {
        assert!(poset_isomorphic(&pentagon(), &diamond()).is_none());
    }
}
