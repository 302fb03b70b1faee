//! Closed-form constructions: partition posets for abelian groups, divisor
//! lattices, dihedral counting formulas and lattice criteria, the chain
//! classification, and the twin-pair constructor. Everything here is
//! cross-checkable against brute-force enumeration.

use crate::error::Error;
use crate::group::{factorize, invariants, Group, GroupInvariants, GroupSpec};
use crate::poset::Poset;
use crate::{Caps, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// An integer partition, parts weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts descending and drops zero parts.
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Componentwise order (with zero padding).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        (0..self.parts.len()).all(|i| self.part(i) <= other.part(i))
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Abelian type: the partition of the Sylow p-subgroup, per prime.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AbelianType {
    by_prime: BTreeMap<u64, Partition>,
}

impl AbelianType {
    pub fn new(by_prime: BTreeMap<u64, Partition>) -> AbelianType {
        let by_prime = by_prime
            .into_iter()
            .filter(|(_, l)| !l.parts.is_empty())
            .collect();
        AbelianType { by_prime }
    }

    /// Type of the abelian group with the given cyclic factor orders.
    pub fn from_factors(factors: &[u32]) -> AbelianType {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &f in factors {
            for (p, a) in factorize(f as u64) {
                by_prime.entry(p).or_default().push(a);
            }
        }
        AbelianType::new(
            by_prime
                .into_iter()
                .map(|(p, v)| (p, Partition::new(v)))
                .collect(),
        )
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.by_prime.keys().copied()
    }

    pub fn partition(&self, p: u64) -> Option<&Partition> {
        self.by_prime.get(&p)
    }

    pub fn order(&self) -> u64 {
        self.by_prime
            .iter()
            .map(|(p, l)| p.pow(l.sum()))
            .product()
    }

    /// Invariant-factor decomposition, largest first.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let k = self
            .by_prime
            .values()
            .map(|l| l.parts.len())
            .max()
            .unwrap_or(0);
        (0..k)
            .map(|i| {
                self.by_prime
                    .iter()
                    .map(|(p, l)| p.pow(l.part(i)))
                    .product()
            })
            .collect()
    }
}

impl std::fmt::Display for AbelianType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let factors = self.invariant_factors();
        if factors.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = factors.iter().map(|d| format!("Z{d}")).collect();
        write!(f, "{}", s.join("x"))
    }
}

/// Number of divisors.
pub fn tau(n: u64) -> u64 {
    factorize(n)
        .iter()
        .map(|&(_, a)| a as u64 + 1)
        .product()
}

/// Sum of divisors.
pub fn sigma(n: u64) -> u64 {
    factorize(n)
        .iter()
        .map(|&(p, a)| (p.pow(a + 1) - 1) / (p - 1))
        .product()
}

/// Partition counts pi(0..=n) by the standard dynamic program.
pub fn partition_counts(n: usize) -> Vec<u64> {
    let mut pi = vec![0u64; n + 1];
    pi[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            pi[total] += pi[total - part];
        }
    }
    pi
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

/// The lattice of divisors of `n` ordered by divisibility.
pub fn divisor_lattice(n: u64) -> Poset {
    let divs = divisors(n);
    Poset::new(
        divs.iter().map(|d| d.to_string()).collect(),
        |a, b| divs[b].is_multiple_of(divs[a]),
    )
    .expect("divisibility is a partial order")
}

/// All partitions componentwise below `lambda` (padded with zeros).
fn bounded_partitions(lambda: &Partition) -> Vec<Partition> {
    let k = lambda.parts.len();
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(lambda: &Partition, k: usize, i: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == k {
            out.push(Partition::new(current.clone()));
            return;
        }
        let hi = lambda
            .part(i)
            .min(current.last().copied().unwrap_or(u32::MAX));
        for v in 0..=hi {
            current.push(v);
            rec(lambda, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(lambda, k, 0, &mut current, &mut out);
    out.sort_unstable_by_key(|m| (m.sum(), m.parts.clone()));
    out.dedup();
    out
}

/// The poset of isomorphism classes of subgroups of an abelian group,
/// built analytically: per prime, partitions componentwise below the type,
/// ordered componentwise; product over primes.
pub fn abelian_iso_poset(t: &AbelianType) -> Poset {
    let mut acc = Poset::chain(1);
    let mut first = true;
    for p in t.primes() {
        let lambda = t.partition(p).unwrap();
        let mus = bounded_partitions(lambda);
        let labels: Vec<String> = mus
            .iter()
            .map(|m| {
                AbelianType::new([(p, m.clone())].into_iter().collect()).to_string()
            })
            .collect();
        let factor = Poset::new(labels, |a, b| mus[a].dominated_by(&mus[b]))
            .expect("componentwise order is a partial order");
        // Proposition-level bound: |Iso| of a p-group of type lambda is at
        // most the running sum of partition counts up to |lambda|.
        let alpha = lambda.sum() as usize;
        let bound: u64 = partition_counts(alpha).iter().sum();
        assert!(
            (factor.size() as u64) <= bound,
            "class count {} exceeds partition-sum bound {}",
            factor.size(),
            bound
        );
        acc = if first {
            factor
        } else {
            acc.product(&factor).expect("product within caps")
        };
        first = false;
    }
    acc
}

/// Subgroup and isomorphism-class counts for the dihedral group of order 2n.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DihedralCounts {
    pub n: u64,
    /// tau(n) + sigma(n)
    pub subgroup_count: u64,
    /// Brute-force-validated class count: 2 tau(n) for n odd, 2 tau(n) - 1
    /// for n even.
    pub iso_class_count: u64,
    /// Value the printed piecewise formula would give (case labels as
    /// printed: 2 tau(n) - 1 for odd n, 2 tau(n) for even n).
    pub printed_formula_value: u64,
    /// True when the validated count differs from the printed case labels.
    pub deviates_from_printed: bool,
}

/// `|L(D_2n)| = tau(n) + sigma(n)` and the class count with the odd/even
/// case labels swapped relative to the printed formula; the swap is forced
/// by brute-force counts (n = 4 gives 5 classes, n = 5 gives 4).
pub fn dihedral_counts(n: u64) -> DihedralCounts {
    assert!(n >= 1);
    let t = tau(n);
    let iso_class_count = if n % 2 == 1 { 2 * t } else { 2 * t - 1 };
    let printed_formula_value = if n % 2 == 1 { 2 * t - 1 } else { 2 * t };
    DihedralCounts {
        n,
        subgroup_count: t + sigma(n),
        iso_class_count,
        printed_formula_value,
        deviates_from_printed: iso_class_count != printed_formula_value,
    }
}

/// Iso(D_2n) is a lattice iff n is odd or a power of two.
pub fn dihedral_is_lattice(n: u64) -> bool {
    assert!(n >= 1);
    n % 2 == 1 || n.is_power_of_two()
}

/// The four families whose poset of subgroup classes is a chain: cyclic
/// p-groups, elementary abelian p-groups, non-abelian groups of order p^3
/// and exponent p, and the quaternion group of order 8.
pub fn is_chain_group_invariants(inv: &GroupInvariants) -> bool {
    let n = inv.order as u64;
    if n == 1 {
        return true;
    }
    let factors = factorize(n);
    if factors.len() != 1 {
        return false;
    }
    let (p, a) = factors[0];
    if inv.abelian {
        // cyclic p-group or elementary abelian p-group
        inv.exponent as u64 == n || inv.exponent as u64 == p
    } else if a == 3 && inv.exponent as u64 == p {
        true
    } else {
        // quaternion group of order 8: unique involution
        n == 8 && inv.element_order_histogram.get(&2) == Some(&1)
    }
}

pub fn is_chain_group(g: &Group) -> bool {
    is_chain_group_invariants(&invariants(g))
}

/// Analytic chain decision for a spec, without materializing when the family
/// is recognized directly.
pub fn is_chain_group_spec(spec: &GroupSpec, caps: &Caps) -> Result<bool> {
    match spec {
        GroupSpec::Cyclic(n) => Ok(*n == 1 || factorize(*n as u64).len() == 1),
        GroupSpec::Abelian(factors) => {
            let t = AbelianType::from_factors(factors);
            let primes: Vec<u64> = t.primes().collect();
            Ok(match primes.len() {
                0 => true,
                1 => {
                    let l = t.partition(primes[0]).unwrap();
                    l.parts().len() == 1 || l.parts().iter().all(|&x| x == 1)
                }
                _ => false,
            })
        }
        GroupSpec::Heisenberg(p) => Ok(*p != 2),
        GroupSpec::Dicyclic(n) => Ok(*n == 8 || *n == 4),
        GroupSpec::Dihedral(n) => Ok(*n == 2),
        GroupSpec::Semidihedral(_) => Ok(false),
        _ => {
            let g = crate::group::construct(spec, caps)
                .map_err(|e| Error::Unresolvable(e.to_string()))?;
            Ok(is_chain_group(&g))
        }
    }
}

/// Two non-isomorphic groups of order `n` with isomorphic class posets,
/// following the inductive construction: a base pair at the prime power with
/// the largest exponent, extended by the remaining cyclic prime-power factors.
pub fn twin_pair(n: u64) -> Result<(GroupSpec, GroupSpec)> {
    if n < 2 {
        return Err(Error::SquareFreeOrder(n));
    }
    let factors = factorize(n);
    // base: largest exponent, smallest prime on ties
    let &(p, a) = factors
        .iter()
        .max_by_key(|&&(p, a)| (a, std::cmp::Reverse(p)))
        .ok_or(Error::SquareFreeOrder(n))?;
    if a < 2 {
        return Err(Error::SquareFreeOrder(n));
    }
    let pa = p.pow(a);
    let (base1, base2) = if a == 2 {
        (
            GroupSpec::Cyclic(pa as u32),
            GroupSpec::Abelian(vec![p as u32, p as u32]),
        )
    } else if p == 2 {
        (
            GroupSpec::Dihedral(pa as u32),
            GroupSpec::Abelian(vec![p.pow(a - 1) as u32, p as u32]),
        )
    } else {
        (
            // the modular group M(p^a)
            GroupSpec::Metacyclic {
                m: p.pow(a - 1) as u32,
                n: p as u32,
                r: (1 + p.pow(a - 2)) as u32,
            },
            GroupSpec::Abelian(vec![p.pow(a - 1) as u32, p as u32]),
        )
    };
    let rest: Vec<u32> = factors
        .iter()
        .filter(|&&(q, _)| q != p)
        .map(|&(q, b)| q.pow(b) as u32)
        .collect();
    let extend = |base: GroupSpec| -> GroupSpec {
        if rest.is_empty() {
            return base;
        }
        match base {
            GroupSpec::Cyclic(c) => {
                let mut v = vec![c];
                v.extend(&rest);
                GroupSpec::Abelian(v)
            }
            GroupSpec::Abelian(mut v) => {
                v.extend(&rest);
                GroupSpec::Abelian(v)
            }
            other => {
                let mut v = vec![other];
                v.extend(rest.iter().map(|&q| GroupSpec::Cyclic(q)));
                GroupSpec::Product(v)
            }
        }
    };
    Ok((extend(base1), extend(base2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_values() {
        assert_eq!(tau(6), 4);
        assert_eq!(sigma(6), 12);
        assert_eq!(tau(12), 6);
        assert_eq!(sigma(12), 28);
        assert_eq!(partition_counts(3), vec![1, 1, 2, 3]);
        assert_eq!(partition_counts(10)[10], 42);
    }

    #[test]
    fn elementary_abelian_cube_is_a_chain() {
        let t = AbelianType::from_factors(&[2, 2, 2]);
        let p = abelian_iso_poset(&t);
        assert_eq!(p.size(), 4);
        assert!(p.is_chain());
    }

    #[test]
    fn p2_types_both_three_chains() {
        let a = abelian_iso_poset(&AbelianType::from_factors(&[9]));
        let b = abelian_iso_poset(&AbelianType::from_factors(&[3, 3]));
        assert_eq!(a.size(), 3);
        assert_eq!(b.size(), 3);
        assert!(a.is_chain() && b.is_chain());
    }

    #[test]
    fn corollary_example_types_isomorphic() {
        use crate::poset::poset_isomorphic;
        let a = abelian_iso_poset(&AbelianType::from_factors(&[2, 6, 18]));
        let b = abelian_iso_poset(&AbelianType::from_factors(&[7, 6125]));
        assert!(poset_isomorphic(&a, &b).is_some());
    }

    #[test]
    fn divisor_lattice_shapes() {
        assert_eq!(divisor_lattice(1).size(), 1);
        let l21 = divisor_lattice(21);
        assert_eq!(l21.size(), 4);
        assert!(!l21.is_chain());
        let l8 = divisor_lattice(8);
        assert!(l8.is_chain());
        assert_eq!(l8.size(), 4);
    }

    #[test]
    fn dihedral_count_values() {
        let c4 = dihedral_counts(4);
        assert_eq!((c4.subgroup_count, c4.iso_class_count), (10, 5));
        assert!(c4.deviates_from_printed);
        let c5 = dihedral_counts(5);
        assert_eq!((c5.subgroup_count, c5.iso_class_count), (8, 4));
        let c6 = dihedral_counts(6);
        assert_eq!((c6.subgroup_count, c6.iso_class_count), (16, 7));
        let c1 = dihedral_counts(1);
        assert_eq!(c1.iso_class_count, 2);
    }

    #[test]
    fn dihedral_lattice_criterion() {
        assert!(!dihedral_is_lattice(6));
        assert!(dihedral_is_lattice(8));
        assert!(dihedral_is_lattice(15));
        assert!(dihedral_is_lattice(1));
    }

    #[test]
    fn chain_families() {
        let caps = Caps::default();
        assert!(is_chain_group_spec(&GroupSpec::Cyclic(8), &caps).unwrap());
        assert!(is_chain_group_spec(&GroupSpec::Heisenberg(3), &caps).unwrap());
        assert!(!is_chain_group_spec(&GroupSpec::Dicyclic(16), &caps).unwrap());
        assert!(!is_chain_group_spec(&GroupSpec::Dihedral(8), &caps).unwrap());
        assert!(is_chain_group_spec(&GroupSpec::Abelian(vec![5, 5, 5]), &caps).unwrap());
        assert!(!is_chain_group_spec(&GroupSpec::Abelian(vec![4, 2]), &caps).unwrap());
    }

    #[test]
    fn twin_pairs() {
        assert_eq!(
            twin_pair(8).unwrap(),
            (GroupSpec::Dihedral(8), GroupSpec::Abelian(vec![4, 2]))
        );
        assert_eq!(
            twin_pair(9).unwrap(),
            (GroupSpec::Cyclic(9), GroupSpec::Abelian(vec![3, 3]))
        );
        assert_eq!(
            twin_pair(12).unwrap(),
            (
                GroupSpec::Abelian(vec![4, 3]),
                GroupSpec::Abelian(vec![2, 2, 3])
            )
        );
        assert!(matches!(twin_pair(30), Err(Error::SquareFreeOrder(30))));
    }

    #[test]
    fn invariant_factors() {
        let t = AbelianType::from_factors(&[2, 6, 18]);
        assert_eq!(t.invariant_factors(), vec![18, 6, 2]);
        assert_eq!(t.to_string(), "Z18xZ6xZ2");
        assert_eq!(t.order(), 216);
    }
}
