//! Concrete finite groups: construction from specs, direct products, and
//! element-level invariants.
//!
//! Groups are materialized as full multiplication tables over element indices
//! `0..n-1`, with the identity always at index 0. That caps practical order
//! but keeps subgroup closure and isomorphism search simple and fast.

use crate::analytic::{AbelianType, Partition};
use crate::bitset::BitSet;
use crate::error::Error;
use crate::perm::{close_generators, Perm};
use crate::{Caps, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Constructor expression naming a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupSpec {
    Cyclic(u32),
    /// Direct product of cyclic groups of the given orders.
    Abelian(Vec<u32>),
    /// Dihedral group of the given (even) order.
    Dihedral(u32),
    /// Dicyclic group of the given order (divisible by 4). For orders 2^k
    /// this is the generalized quaternion group.
    Dicyclic(u32),
    /// Semidihedral group of order 2^k, k >= 4.
    Semidihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    /// `<a, b | a^m = b^n = 1, b a b^-1 = a^r>` with gcd(r,m)=1, r^n = 1 mod m.
    Metacyclic { m: u32, n: u32, r: u32 },
    /// Upper unitriangular 3x3 matrices over the p-element field.
    Heisenberg(u32),
    /// Permutation group generated by the given permutations of `0..degree`
    /// (each stored as an image vector).
    Perm { degree: u32, gens: Vec<Vec<u16>> },
    Product(Vec<GroupSpec>),
    /// Reference into a loaded small-groups catalog.
    CatalogRef { order: u32, index: u32 },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::Abelian(v) => {
                let parts: Vec<String> = v.iter().map(|n| format!("Z{n}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "Q{n}"),
            GroupSpec::Semidihedral(n) => write!(f, "SD{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Metacyclic { m, n, r } => write!(f, "MC({m},{n},{r})"),
            GroupSpec::Heisenberg(p) => write!(f, "Heis({p})"),
            GroupSpec::Perm { degree, gens } => {
                let cyc: Vec<String> = gens
                    .iter()
                    .map(|g| Perm::from_images(g.clone()).map_or("?".into(), |p| p.to_cycles()))
                    .collect();
                write!(f, "Perm({degree})[{}]", cyc.join(";"))
            }
            GroupSpec::Product(v) => {
                let parts: Vec<String> = v.iter().map(|s| format!("({s})")).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::CatalogRef { order, index } => write!(f, "G({order},{index})"),
        }
    }
}

/// A concrete finite group: full multiplication table over `0..order`.
#[derive(Clone)]
pub struct Group {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    pub spec: Option<GroupSpec>,
    pub element_names: Vec<String>,
}

impl Group {
    pub fn order(&self) -> usize {
        self.order
    }

    pub const IDENTITY: u16 = 0;

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inverse[a as usize]
    }

    pub fn conjugate(&self, g: u16, h: u16) -> u16 {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_order(&self, a: u16) -> usize {
        let mut x = a;
        let mut k = 1usize;
        while x != Self::IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.order as u16
    }

    /// The raw multiplication table, row-major.
    pub fn table(&self) -> &[u16] {
        &self.table
    }

    /// Build a group from a raw table, validating the group axioms.
    ///
    /// Associativity is checked in full for orders up to `caps.check_cap` and
    /// spot-checked on deterministic pseudo-random triples above it.
    pub fn from_table(
        table: Vec<u16>,
        spec: Option<GroupSpec>,
        element_names: Vec<String>,
        caps: &Caps,
    ) -> Result<Group> {
        let order = element_names.len();
        if order == 0 || table.len() != order * order {
            return Err(Error::Internal("malformed multiplication table".into()));
        }
        if order > caps.table_cap {
            return Err(Error::OrderCapExceeded {
                order: order as u64,
                cap: caps.table_cap,
            });
        }
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        // identity at index 0
        for j in 0..order {
            if at(0, j) != j || at(j, 0) != j {
                return Err(Error::Internal("element 0 is not a two-sided identity".into()));
            }
        }
        // Latin square
        for a in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for b in 0..order {
                let r = at(a, b);
                let c = at(b, a);
                if r >= order || c >= order || row[r] || col[c] {
                    return Err(Error::Internal("table is not a Latin square".into()));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        // two-sided inverses
        let mut inverse = vec![0u16; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| at(a, b) == 0)
                .ok_or_else(|| Error::Internal("missing inverse".into()))?;
            if at(b, a) != 0 {
                return Err(Error::Internal("inverse is not two-sided".into()));
            }
            inverse[a] = b as u16;
        }
        // associativity
        if order <= caps.check_cap {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::Internal("table is not associative".into()));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64 ^ order as u64;
            let mut next = move || {
                // splitmix64
                state = state.wrapping_add(0x9e3779b97f4a7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
                (z ^ (z >> 31)) as usize
            };
            for _ in 0..20_000 {
                let a = next() % order;
                let b = next() % order;
                let c = next() % order;
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(Error::Internal("table fails associativity spot-check".into()));
                }
            }
        }
        Ok(Group {
            order,
            table,
            inverse,
            spec,
            element_names,
        })
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

/// Construct a concrete group from a spec. `CatalogRef` must be resolved by
/// the caller (see `catalog::resolve_spec`) before construction.
pub fn construct(spec: &GroupSpec, caps: &Caps) -> Result<Group> {
    let check_order = |n: u64| -> Result<usize> {
        if n == 0 {
            return Err(invalid("group order must be positive"));
        }
        if n > caps.table_cap as u64 {
            return Err(Error::OrderCapExceeded {
                order: n,
                cap: caps.table_cap,
            });
        }
        Ok(n as usize)
    };
    match spec {
        GroupSpec::Cyclic(n) => {
            let n = check_order(*n as u64)?;
            from_pairs_mod(spec, &[n], |a, b, m| {
                vec![(a[0] + b[0]) % m[0]]
            }, caps)
        }
        GroupSpec::Abelian(factors) => {
            if factors.is_empty() {
                return Err(invalid("Abelian needs at least one invariant factor"));
            }
            let mut n: u64 = 1;
            for &f in factors {
                if f == 0 {
                    return Err(invalid("invariant factors must be positive"));
                }
                n *= f as u64;
            }
            check_order(n)?;
            let mods: Vec<usize> = factors.iter().map(|&f| f as usize).collect();
            from_pairs_mod(spec, &mods, |a, b, m| {
                a.iter().zip(b).zip(m).map(|((x, y), k)| (x + y) % k).collect()
            }, caps)
        }
        GroupSpec::Dihedral(order) => {
            if *order < 2 || order % 2 != 0 {
                return Err(invalid(format!("dihedral order {order} must be even and >= 2")));
            }
            let n = check_order(*order as u64)? / 2;
            from_pairs_mod(spec, &[n, 2], move |a, b, _| {
                let (i, j) = (a[0], a[1]);
                let (i2, j2) = (b[0], b[1]);
                let i2 = if j == 1 { (n - i2) % n } else { i2 };
                vec![(i + i2) % n, (j + j2) % 2]
            }, caps)
        }
        GroupSpec::Dicyclic(order) => {
            if *order < 4 || order % 4 != 0 {
                return Err(invalid(format!("dicyclic order {order} must be divisible by 4")));
            }
            let two_m = check_order(*order as u64)? / 2;
            let m = two_m / 2;
            // elements a^i b^j with a of order 2m, b^2 = a^m, b a b^-1 = a^-1
            from_pairs_mod(spec, &[two_m, 2], move |a, b, _| {
                let (i, j) = (a[0], a[1]);
                let (i2, j2) = (b[0], b[1]);
                if j == 0 {
                    vec![(i + i2) % two_m, j2]
                } else if j2 == 0 {
                    vec![(i + two_m - i2) % two_m, 1]
                } else {
                    vec![(i + two_m - i2 + m) % two_m, 0]
                }
            }, caps)
        }
        GroupSpec::Semidihedral(order) => {
            let n = *order;
            if n < 16 || !n.is_power_of_two() {
                return Err(invalid(format!(
                    "semidihedral order {n} must be 2^k with k >= 4"
                )));
            }
            let half = n / 2;
            construct(
                &GroupSpec::Metacyclic {
                    m: half,
                    n: 2,
                    r: half / 2 - 1,
                },
                caps,
            )
            .map(|mut g| {
                g.spec = Some(spec.clone());
                g
            })
        }
        GroupSpec::Metacyclic { m, n, r } => {
            if *m == 0 || *n == 0 {
                return Err(invalid("metacyclic parameters must be positive"));
            }
            let mm = *m as u64;
            let order = check_order(mm * *n as u64)?;
            let r = (*r as u64) % mm.max(1);
            if gcd(r, mm) != 1 {
                return Err(invalid(format!("Metacyclic({m},{n},{r}): gcd(r, m) != 1")));
            }
            if pow_mod(r, *n as u64, mm) != 1 % mm {
                return Err(invalid(format!(
                    "Metacyclic({m},{n},{r}): r^n != 1 (mod m)"
                )));
            }
            // precompute r^j mod m
            let mut rpow = vec![1u64 % mm.max(1); *n as usize];
            for j in 1..*n as usize {
                rpow[j] = rpow[j - 1] * r % mm;
            }
            let (m_us, n_us) = (*m as usize, *n as usize);
            let _ = order;
            from_pairs_mod(spec, &[m_us, n_us], move |a, b, _| {
                let (i, j) = (a[0], a[1]);
                let (i2, j2) = (b[0], b[1]);
                vec![
                    ((i as u64 + rpow[j] * i2 as u64) % mm) as usize,
                    (j + j2) % n_us,
                ]
            }, caps)
        }
        GroupSpec::Heisenberg(p) => {
            if !is_prime(*p as u64) {
                return Err(invalid(format!("Heisenberg({p}): p must be prime")));
            }
            check_order((*p as u64).pow(3))?;
            let p_us = *p as usize;
            from_pairs_mod(spec, &[p_us, p_us, p_us], move |a, b, _| {
                vec![
                    (a[0] + b[0]) % p_us,
                    (a[1] + b[1]) % p_us,
                    (a[2] + b[2] + a[0] * b[1]) % p_us,
                ]
            }, caps)
        }
        GroupSpec::Symmetric(d) => {
            let elems = all_perms(*d as usize, false, caps)?;
            from_perm_list(spec, *d as usize, elems, caps)
        }
        GroupSpec::Alternating(d) => {
            let elems = all_perms(*d as usize, true, caps)?;
            from_perm_list(spec, *d as usize, elems, caps)
        }
        GroupSpec::Perm { degree, gens } => {
            let degree = *degree as usize;
            let gens: Vec<Perm> = gens
                .iter()
                .map(|g| Perm::from_images(g.clone()))
                .collect::<Result<_>>()?;
            for g in &gens {
                if g.degree() != degree {
                    return Err(invalid("generator degree mismatch"));
                }
            }
            let elems = close_generators(degree, &gens, caps.table_cap)?;
            from_perm_list(spec, degree, elems, caps)
        }
        GroupSpec::Product(specs) => {
            let mut acc = construct(&GroupSpec::Cyclic(1), caps)?;
            for s in specs {
                let g = construct(s, caps)?;
                acc = direct_product(&acc, &g, caps)?;
            }
            acc.spec = Some(spec.clone());
            Ok(acc)
        }
        GroupSpec::CatalogRef { order, index } => Err(Error::Unresolvable(format!(
            "G({order},{index}) requires a loaded catalog"
        ))),
    }
}

/// Component-wise direct product of two concrete groups.
pub fn direct_product(g1: &Group, g2: &Group, caps: &Caps) -> Result<Group> {
    let n1 = g1.order();
    let n2 = g2.order();
    let order = n1 as u64 * n2 as u64;
    if order > caps.table_cap as u64 {
        return Err(Error::OrderCapExceeded {
            order,
            cap: caps.table_cap,
        });
    }
    let order = order as usize;
    let idx = |a1: usize, a2: usize| a1 * n2 + a2;
    let mut table = vec![0u16; order * order];
    for a1 in 0..n1 {
        for a2 in 0..n2 {
            let a = idx(a1, a2);
            for b1 in 0..n1 {
                let p1 = g1.mul(a1 as u16, b1 as u16) as usize;
                for b2 in 0..n2 {
                    let p2 = g2.mul(a2 as u16, b2 as u16) as usize;
                    table[a * order + idx(b1, b2)] = idx(p1, p2) as u16;
                }
            }
        }
    }
    let names = (0..n1)
        .flat_map(|a1| {
            (0..n2).map(move |a2| (a1, a2))
        })
        .map(|(a1, a2)| format!("({},{})", g1.element_names[a1], g2.element_names[a2]))
        .collect();
    let spec = match (&g1.spec, &g2.spec) {
        (Some(s1), Some(s2)) => Some(GroupSpec::Product(vec![s1.clone(), s2.clone()])),
        _ => None,
    };
    Group::from_table(table, spec, names, caps)
}

/// Build a group whose elements are tuples with the given per-coordinate
/// moduli (identity = all zeros) and the given tuple multiplication.
fn from_pairs_mod(
    spec: &GroupSpec,
    mods: &[usize],
    mul: impl Fn(&[usize], &[usize], &[usize]) -> Vec<usize>,
    caps: &Caps,
) -> Result<Group> {
    let order: usize = mods.iter().product();
    let decode = |mut x: usize| -> Vec<usize> {
        let mut t = vec![0; mods.len()];
        for k in (0..mods.len()).rev() {
            t[k] = x % mods[k];
            x /= mods[k];
        }
        t
    };
    let encode = |t: &[usize]| -> usize {
        t.iter().zip(mods).fold(0, |acc, (&v, &m)| acc * m + v)
    };
    let tuples: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let mut table = vec![0u16; order * order];
    for a in 0..order {
        for b in 0..order {
            table[a * order + b] = encode(&mul(&tuples[a], &tuples[b], mods)) as u16;
        }
    }
    let names = tuples
        .iter()
        .map(|t| {
            if t.len() == 1 {
                format!("{}", t[0])
            } else {
                let parts: Vec<String> = t.iter().map(|v| v.to_string()).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    Group::from_table(table, Some(spec.clone()), names, caps)
}

fn from_perm_list(
    spec: &GroupSpec,
    _degree: usize,
    mut elems: Vec<Perm>,
    caps: &Caps,
) -> Result<Group> {
    // Identity first, the rest sorted for determinism.
    elems.sort_by(|a, b| {
        (!a.is_identity(), a.to_cycles()).cmp(&(!b.is_identity(), b.to_cycles()))
    });
    let order = elems.len();
    if order > caps.table_cap {
        return Err(Error::OrderCapExceeded {
            order: order as u64,
            cap: caps.table_cap,
        });
    }
    let index: std::collections::HashMap<&Perm, usize> =
        elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut table = vec![0u16; order * order];
    for a in 0..order {
        for b in 0..order {
            let p = elems[a].compose(&elems[b]);
            let i = *index
                .get(&p)
                .ok_or_else(|| Error::Internal("permutation set not closed".into()))?;
            table[a * order + b] = i as u16;
        }
    }
    let names = elems.iter().map(|p| p.to_cycles()).collect();
    Group::from_table(table, Some(spec.clone()), names, caps)
}

fn all_perms(d: usize, even_only: bool, caps: &Caps) -> Result<Vec<Perm>> {
    let mut count: u64 = 1;
    for k in 2..=d.max(1) as u64 {
        count *= k;
        if count > 2 * caps.table_cap as u64 {
            return Err(Error::OrderCapExceeded {
                order: count,
                cap: caps.table_cap,
            });
        }
    }
    let mut out = Vec::new();
    let mut images: Vec<u16> = (0..d as u16).collect();
    loop {
        let p = Perm::from_images(images.clone())?;
        if !even_only || p.is_even() {
            out.push(p);
        }
        // next lexicographic permutation
        if !next_perm(&mut images) {
            break;
        }
    }
    Ok(out)
}

fn next_perm(v: &mut [u16]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Closure of a seed set under the parent group's multiplication.
pub fn closure(g: &Group, seed: impl IntoIterator<Item = u16>) -> BitSet {
    let mut members = BitSet::new(g.order());
    members.insert(Group::IDENTITY as usize);
    let mut list: Vec<u16> = vec![Group::IDENTITY];
    let mut queue: Vec<u16> = Vec::new();
    for s in seed {
        if !members.contains(s as usize) {
            members.insert(s as usize);
            list.push(s);
            queue.push(s);
        }
    }
    while let Some(x) = queue.pop() {
        // multiply x against everything known so far, both ways
        let mut i = 0;
        while i < list.len() {
            let y = list[i];
            for p in [g.mul(x, y), g.mul(y, x)] {
                if !members.contains(p as usize) {
                    members.insert(p as usize);
                    list.push(p);
                    queue.push(p);
                }
            }
            i += 1;
        }
    }
    members
}

/// Element-level invariants of a concrete group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInvariants {
    pub order: usize,
    pub exponent: usize,
    pub element_order_histogram: BTreeMap<usize, usize>,
    pub abelian: bool,
    pub abelian_type: Option<AbelianType>,
    pub center_order: usize,
    pub derived_subgroup_order: usize,
    pub solvable: bool,
}

pub fn invariants(g: &Group) -> GroupInvariants {
    let n = g.order();
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut orders = vec![0usize; n];
    for a in g.elements() {
        let o = g.element_order(a);
        orders[a as usize] = o;
        *histogram.entry(o).or_insert(0) += 1;
    }
    let exponent = histogram.keys().fold(1usize, |acc, &o| lcm(acc, o));
    let abelian = (0..n as u16).all(|a| (0..a).all(|b| g.mul(a, b) == g.mul(b, a)));
    let center_order = g
        .elements()
        .filter(|&a| g.elements().all(|b| g.mul(a, b) == g.mul(b, a)))
        .count();
    let derived = derived_subgroup(g, None);
    let derived_subgroup_order = derived.count();
    let solvable = {
        let mut current = derived.clone();
        loop {
            if current.count() == 1 {
                break true;
            }
            let next = derived_subgroup(g, Some(&current));
            if next.count() == current.count() {
                break false;
            }
            current = next;
        }
    };
    let abelian_type = if abelian {
        Some(abelian_type_from_orders(n, &orders))
    } else {
        None
    };
    GroupInvariants {
        order: n,
        exponent,
        element_order_histogram: histogram,
        abelian,
        abelian_type,
        center_order,
        derived_subgroup_order,
        solvable,
    }
}

/// Subgroup generated by all commutators of elements of `within`
/// (the whole group when `within` is `None`).
fn derived_subgroup(g: &Group, within: Option<&BitSet>) -> BitSet {
    let members: Vec<u16> = match within {
        Some(s) => s.iter().map(|i| i as u16).collect(),
        None => g.elements().collect(),
    };
    let mut commutators = Vec::new();
    for &a in &members {
        for &b in &members {
            let c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            commutators.push(c);
        }
    }
    commutators.sort_unstable();
    commutators.dedup();
    closure(g, commutators)
}

/// Recover the abelian type (partition per prime) from element-order counts.
///
/// For the Sylow p-part of type lambda, the count of solutions of
/// `x^(p^k) = 1` is `p^(sum_i min(lambda_i, k))`; successive differences of
/// those logarithms give the conjugate partition.
fn abelian_type_from_orders(n: usize, orders: &[usize]) -> AbelianType {
    let mut by_prime: BTreeMap<u64, Partition> = BTreeMap::new();
    for (p, a) in factorize(n as u64) {
        let mut s = vec![0u32; a as usize + 1];
        for k in 1..=a {
            let pk = p.pow(k);
            let count = orders
                .iter()
                .filter(|&&o| pk % o as u64 == 0)
                .count() as u64;
            // count is a power of p
            let mut e = 0u32;
            let mut c = count;
            while c > 1 {
                c /= p;
                e += 1;
            }
            s[k as usize] = e;
        }
        let conj: Vec<u32> = (1..=a as usize)
            .map(|k| s[k] - s[k - 1])
            .take_while(|&d| d > 0)
            .collect();
        let max_part = conj.first().copied().unwrap_or(0);
        let parts: Vec<u32> = (1..=max_part)
            .map(|i| conj.iter().filter(|&&d| d >= i).count() as u32)
            .collect();
        by_prime.insert(p, Partition::new(parts));
    }
    AbelianType::new(by_prime)
}

/// Relabel a group's elements by a permutation of indices fixing the identity.
pub fn relabel(g: &Group, perm: &[u16], caps: &Caps) -> Result<Group> {
    let n = g.order();
    assert_eq!(perm.len(), n);
    assert_eq!(perm[0], 0, "relabeling must fix the identity");
    let mut inv_perm = vec![0u16; n];
    for (i, &p) in perm.iter().enumerate() {
        inv_perm[p as usize] = i as u16;
    }
    let mut table = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] =
                perm[g.mul(inv_perm[a], inv_perm[b]) as usize];
        }
    }
    let mut names = vec![String::new(); n];
    for (i, &p) in perm.iter().enumerate() {
        names[p as usize] = g.element_names[i].clone();
    }
    Group::from_table(table, None, names, caps)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a as u64, b as u64) as usize * b
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn count_order(g: &Group, k: usize) -> usize {
        g.elements().filter(|&a| g.element_order(a) == k).count()
    }

    #[test]
    fn dihedral_12_has_seven_involutions() {
        let g = construct(&GroupSpec::Dihedral(12), &caps()).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(count_order(&g, 2), 7);
    }

    #[test]
    fn trivial_group() {
        let g = construct(&GroupSpec::Cyclic(1), &caps()).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn zm_group_21_has_cyclic_sylows() {
        let g = construct(&GroupSpec::Metacyclic { m: 7, n: 3, r: 2 }, &caps()).unwrap();
        assert_eq!(g.order(), 21);
        let inv = invariants(&g);
        assert!(!inv.abelian);
        // Sylow subgroups <a> = Z7 and <b> = Z3: witnessed by element orders
        assert_eq!(inv.element_order_histogram[&7], 6);
        assert_eq!(inv.element_order_histogram[&3], 14);
    }

    #[test]
    fn invalid_metacyclic_rejected() {
        let err = construct(&GroupSpec::Metacyclic { m: 7, n: 3, r: 3 }, &caps());
        assert!(matches!(err, Err(Error::InvalidSpec(_))));
        assert!(matches!(
            construct(&GroupSpec::Dihedral(7), &caps()),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn order_cap() {
        let err = construct(&GroupSpec::Cyclic(6000), &caps());
        assert!(matches!(err, Err(Error::OrderCapExceeded { .. })));
    }

    #[test]
    fn z2_times_z3_is_z6() {
        let g1 = construct(&GroupSpec::Cyclic(2), &caps()).unwrap();
        let g2 = construct(&GroupSpec::Cyclic(3), &caps()).unwrap();
        let p = direct_product(&g1, &g2, &caps()).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(count_order(&p, 6), 2);
    }

    #[test]
    fn product_with_trivial() {
        let g = construct(&GroupSpec::Dihedral(8), &caps()).unwrap();
        let t = construct(&GroupSpec::Cyclic(1), &caps()).unwrap();
        let p = direct_product(&g, &t, &caps()).unwrap();
        assert_eq!(invariants(&p), invariants(&g));
    }

    #[test]
    fn d8_times_z4_has_order_32() {
        let g1 = construct(&GroupSpec::Dihedral(8), &caps()).unwrap();
        let g2 = construct(&GroupSpec::Cyclic(4), &caps()).unwrap();
        let p = direct_product(&g1, &g2, &caps()).unwrap();
        assert_eq!(p.order(), 32);
    }

    #[test]
    fn q8_invariants() {
        let g = construct(&GroupSpec::Dicyclic(8), &caps()).unwrap();
        let inv = invariants(&g);
        assert_eq!(inv.exponent, 4);
        assert_eq!(inv.center_order, 2);
        assert_eq!(inv.derived_subgroup_order, 2);
        assert_eq!(inv.element_order_histogram[&2], 1);
        assert!(inv.solvable);
    }

    #[test]
    fn z6_abelian_type() {
        let g = construct(&GroupSpec::Cyclic(6), &caps()).unwrap();
        let inv = invariants(&g);
        assert!(inv.abelian);
        assert_eq!(inv.exponent, 6);
        let t = inv.abelian_type.unwrap();
        assert_eq!(t.partition(2).unwrap().parts(), &[1]);
        assert_eq!(t.partition(3).unwrap().parts(), &[1]);
    }

    #[test]
    fn heisenberg_3() {
        let g = construct(&GroupSpec::Heisenberg(3), &caps()).unwrap();
        let inv = invariants(&g);
        assert_eq!(inv.order, 27);
        assert_eq!(inv.exponent, 3);
        assert!(!inv.abelian);
    }

    #[test]
    fn abelian_type_of_z4_x_z2() {
        let g = construct(&GroupSpec::Abelian(vec![4, 2]), &caps()).unwrap();
        let t = invariants(&g).abelian_type.unwrap();
        assert_eq!(t.partition(2).unwrap().parts(), &[2, 1]);
    }

    #[test]
    fn symmetric_and_alternating() {
        let s4 = construct(&GroupSpec::Symmetric(4), &caps()).unwrap();
        assert_eq!(s4.order(), 24);
        let a4 = construct(&GroupSpec::Alternating(4), &caps()).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(invariants(&a4).solvable);
    }

    #[test]
    fn semidihedral_16() {
        let g = construct(&GroupSpec::Semidihedral(16), &caps()).unwrap();
        assert_eq!(g.order(), 16);
        let inv = invariants(&g);
        assert!(!inv.abelian);
        // odd powers of the rotation have order 8; even-index reflections
        // and the central rotation are the 5 involutions
        assert_eq!(inv.element_order_histogram[&2], 5);
        assert_eq!(inv.element_order_histogram[&4], 6);
        assert_eq!(inv.element_order_histogram[&8], 4);
    }

    #[test]
    fn relabel_preserves_invariants() {
        let g = construct(&GroupSpec::Dicyclic(12), &caps()).unwrap();
        let n = g.order();
        // a fixed nontrivial relabeling fixing 0
        let mut perm: Vec<u16> = (0..n as u16).collect();
        perm[1..].rotate_left(3);
        let h = relabel(&g, &perm, &caps()).unwrap();
        assert_eq!(invariants(&g), invariants(&h));
    }

    #[test]
    fn perm_spec_closure() {
        let gens = vec![
            Perm::parse_cycles("(1 2)", 4).unwrap(),
            Perm::parse_cycles("(1 2 3 4)", 4).unwrap(),
        ];
        let spec = GroupSpec::Perm {
            degree: 4,
            gens: gens
                .iter()
                .map(|p| (0..4).map(|i| p.apply(i)).collect())
                .collect(),
        };
        let g = construct(&spec, &caps()).unwrap();
        assert_eq!(g.order(), 24);
    }
}
