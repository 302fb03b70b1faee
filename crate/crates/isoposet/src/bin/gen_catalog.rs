//! Regenerates data/catalog.txt: the complete list of groups of order <= 24
//! plus named extras, as permutation generators in cycle notation.
//!
//! Completeness per order is proved by counting: the number of isomorphism
//! types of each order <= 24 is known, and the generator validates that the
//! emitted entries of each order are pairwise non-isomorphic.

use isoposet::group::{construct, Group, GroupSpec};
use isoposet::grpiso::{generating_sequence, is_isomorphic};
use isoposet::perm::Perm;
use isoposet::Caps;

/// Known number of isomorphism types for each order 1..=24.
const TYPE_COUNTS: [usize; 24] = [
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15,
];

struct Entry {
    order: u32,
    name: String,
    degree: usize,
    gens: Vec<Perm>,
}

fn caps() -> Caps {
    Caps {
        table_cap: 5000,
        check_cap: 512,
        subgroup_cap: 200_000,
    }
}

/// Natural action of a product of cyclic groups: one cycle per factor on its
/// own block of points.
fn abelian_entry(name: &str, factors: &[u32]) -> Entry {
    let degree: usize = factors.iter().map(|&f| f as usize).sum();
    let mut gens = Vec::new();
    let mut offset = 0usize;
    for &f in factors {
        let f = f as usize;
        if f > 1 {
            let mut images: Vec<u16> = (0..degree as u16).collect();
            for i in 0..f {
                images[offset + i] = (offset + (i + 1) % f) as u16;
            }
            gens.push(Perm::from_images(images).unwrap());
        }
        offset += f;
    }
    if gens.is_empty() {
        gens.push(Perm::identity(degree));
    }
    let order = factors.iter().product::<u32>();
    Entry {
        order,
        name: name.to_string(),
        degree,
        gens,
    }
}

/// Natural degree-n action of the dihedral group of order 2n.
fn dihedral_entry(order: u32) -> Entry {
    let n = (order / 2) as usize;
    assert!(n >= 3);
    let rot = Perm::from_images((0..n).map(|x| ((x + 1) % n) as u16).collect()).unwrap();
    let refl = Perm::from_images((0..n).map(|x| ((n - x) % n) as u16).collect()).unwrap();
    Entry {
        order,
        name: format!("D{order}"),
        degree: n,
        gens: vec![rot, refl],
    }
}

fn perm_entry(order: u32, name: &str, degree: usize, cycles: &[&str]) -> Entry {
    let gens = cycles
        .iter()
        .map(|c| Perm::parse_cycles(c, degree).unwrap())
        .collect();
    Entry {
        order,
        name: name.to_string(),
        degree,
        gens,
    }
}

/// Regular representation: generators act by left translation on the element
/// indices of the constructed group.
fn regular_entry(name: &str, g: &Group) -> Entry {
    let n = g.order();
    let gens: Vec<Perm> = generating_sequence(g)
        .into_iter()
        .map(|a| {
            Perm::from_images((0..n as u16).map(|x| g.mul(a, x)).collect()).unwrap()
        })
        .collect();
    Entry {
        order: n as u32,
        name: name.to_string(),
        degree: n,
        gens,
    }
}

fn regular_spec(name: &str, spec: GroupSpec) -> Entry {
    let g = construct(&spec, &caps()).unwrap_or_else(|e| panic!("{name}: {e}"));
    regular_entry(name, &g)
}

/// Build a group from an element list and a product function, identity first.
fn group_from_elements<T: Clone + Eq + std::hash::Hash>(
    elems: Vec<T>,
    mul: impl Fn(&T, &T) -> T,
) -> Group {
    use std::collections::HashMap;
    let n = elems.len();
    let index: HashMap<T, usize> = elems
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let mut table = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[&mul(&elems[a], &elems[b])] as u16;
        }
    }
    let names = (0..n).map(|i| format!("g{i}")).collect();
    Group::from_table(table, None, names, &caps()).expect("valid group table")
}

/// (C2 x C2) : C4, the order-16 group where a square generator swaps the two
/// Klein coordinates.
fn g16_swap() -> Group {
    let mut elems = Vec::new();
    for k in 0..4u8 {
        for x in 0..2u8 {
            for y in 0..2u8 {
                elems.push((k, x, y));
            }
        }
    }
    // identity (0,0,0) is first
    group_from_elements(elems, |&(k, x, y), &(k2, x2, y2)| {
        let (x2, y2) = if k % 2 == 1 { (y2, x2) } else { (x2, y2) };
        ((k + k2) % 4, (x ^ x2), (y ^ y2))
    })
}

/// Central product C4 o D8 (the Pauli group of order 16).
fn g16_pauli() -> Group {
    let mut elems = Vec::new();
    for k in 0..4u8 {
        for a in 0..2u8 {
            for b in 0..2u8 {
                elems.push((k, a, b));
            }
        }
    }
    group_from_elements(elems, |&(k, a, b), &(k2, a2, b2)| {
        ((k + k2 + 2 * b * a2) % 4, a ^ a2, b ^ b2)
    })
}

/// SL(2,3) acting on the 8 nonzero vectors of F3^2.
fn sl23_entry() -> Entry {
    let vectors: Vec<(u8, u8)> = (0..3u8)
        .flat_map(|a| (0..3u8).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let idx = |v: (u8, u8)| vectors.iter().position(|&w| w == v).unwrap() as u16;
    let s = Perm::from_images(
        vectors.iter().map(|&(a, b)| idx(((3 - b) % 3, a))).collect(),
    )
    .unwrap();
    let t = Perm::from_images(
        vectors.iter().map(|&(a, b)| idx(((a + b) % 3, b))).collect(),
    )
    .unwrap();
    Entry {
        order: 24,
        name: "SL(2,3)".to_string(),
        degree: 8,
        gens: vec![s, t],
    }
}

fn build_entries() -> Vec<Entry> {
    let mut e: Vec<Entry> = Vec::new();

    // --- complete through order 24 ---
    e.push(abelian_entry("1", &[1]));
    for n in [2u32, 3, 5, 7, 11, 13, 17, 19, 23] {
        e.push(abelian_entry(&format!("Z{n}"), &[n]));
    }
    // 4
    e.push(abelian_entry("Z4", &[4]));
    e.push(abelian_entry("Z2xZ2", &[2, 2]));
    // 6
    e.push(abelian_entry("Z6", &[6]));
    e.push(perm_entry(6, "S3", 3, &["(1 2 3)", "(1 2)"]));
    // 8
    e.push(abelian_entry("Z8", &[8]));
    e.push(abelian_entry("Z4xZ2", &[4, 2]));
    e.push(abelian_entry("Z2xZ2xZ2", &[2, 2, 2]));
    e.push(dihedral_entry(8));
    e.push(regular_spec("Q8", GroupSpec::Dicyclic(8)));
    // 9
    e.push(abelian_entry("Z9", &[9]));
    e.push(abelian_entry("Z3xZ3", &[3, 3]));
    // 10
    e.push(abelian_entry("Z10", &[10]));
    e.push(dihedral_entry(10));
    // 12
    e.push(abelian_entry("Z12", &[12]));
    e.push(abelian_entry("Z6xZ2", &[6, 2]));
    e.push(dihedral_entry(12));
    e.push(regular_spec("Q12", GroupSpec::Dicyclic(12)));
    e.push(perm_entry(12, "A4", 4, &["(1 2 3)", "(2 3 4)"]));
    // 14
    e.push(abelian_entry("Z14", &[14]));
    e.push(dihedral_entry(14));
    // 15
    e.push(abelian_entry("Z15", &[15]));
    // 16
    e.push(abelian_entry("Z16", &[16]));
    e.push(abelian_entry("Z8xZ2", &[8, 2]));
    e.push(abelian_entry("Z4xZ4", &[4, 4]));
    e.push(abelian_entry("Z4xZ2xZ2", &[4, 2, 2]));
    e.push(abelian_entry("Z2xZ2xZ2xZ2", &[2, 2, 2, 2]));
    e.push(dihedral_entry(16));
    e.push(regular_spec("Q16", GroupSpec::Dicyclic(16)));
    e.push(regular_spec("SD16", GroupSpec::Semidihedral(16)));
    e.push(regular_spec("M16", GroupSpec::Metacyclic { m: 8, n: 2, r: 5 }));
    e.push(regular_spec("ZM(4,4,3)", GroupSpec::Metacyclic { m: 4, n: 4, r: 3 }));
    e.push(regular_spec(
        "D8xZ2",
        GroupSpec::Product(vec![GroupSpec::Dihedral(8), GroupSpec::Cyclic(2)]),
    ));
    e.push(regular_spec(
        "Q8xZ2",
        GroupSpec::Product(vec![GroupSpec::Dicyclic(8), GroupSpec::Cyclic(2)]),
    ));
    e.push(regular_entry("C2^2:C4", &g16_swap()));
    e.push(regular_entry("C4oD8", &g16_pauli()));
    // 18
    e.push(abelian_entry("Z18", &[18]));
    e.push(abelian_entry("Z6xZ3", &[6, 3]));
    e.push(dihedral_entry(18));
    e.push(regular_spec(
        "Z3xS3",
        GroupSpec::Product(vec![GroupSpec::Cyclic(3), GroupSpec::Symmetric(3)]),
    ));
    e.push(perm_entry(
        18,
        "C3^2:C2",
        6,
        &["(1 2 3)", "(4 5 6)", "(2 3)(5 6)"],
    ));
    // 20
    e.push(abelian_entry("Z20", &[20]));
    e.push(abelian_entry("Z10xZ2", &[10, 2]));
    e.push(dihedral_entry(20));
    e.push(regular_spec("Q20", GroupSpec::Dicyclic(20)));
    e.push(regular_spec("ZM(5,4,2)", GroupSpec::Metacyclic { m: 5, n: 4, r: 2 }));
    // 21
    e.push(abelian_entry("Z21", &[21]));
    e.push(regular_spec("ZM(7,3,2)", GroupSpec::Metacyclic { m: 7, n: 3, r: 2 }));
    // 22
    e.push(abelian_entry("Z22", &[22]));
    e.push(dihedral_entry(22));
    // 24
    e.push(abelian_entry("Z24", &[24]));
    e.push(abelian_entry("Z12xZ2", &[12, 2]));
    e.push(abelian_entry("Z6xZ2xZ2", &[6, 2, 2]));
    e.push(regular_spec("ZM(3,8,2)", GroupSpec::Metacyclic { m: 3, n: 8, r: 2 }));
    e.push(sl23_entry());
    e.push(regular_spec("Q24", GroupSpec::Dicyclic(24)));
    e.push(regular_spec(
        "Z4xS3",
        GroupSpec::Product(vec![GroupSpec::Cyclic(4), GroupSpec::Symmetric(3)]),
    ));
    e.push(dihedral_entry(24));
    e.push(regular_spec(
        "Z2xQ12",
        GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Dicyclic(12)]),
    ));
    e.push(perm_entry(
        24,
        "C3:D8",
        7,
        &["(1 2 3)", "(2 3)(4 5 6 7)", "(4 6)"],
    ));
    e.push(regular_spec(
        "Z3xD8",
        GroupSpec::Product(vec![GroupSpec::Cyclic(3), GroupSpec::Dihedral(8)]),
    ));
    e.push(regular_spec(
        "Z3xQ8",
        GroupSpec::Product(vec![GroupSpec::Cyclic(3), GroupSpec::Dicyclic(8)]),
    ));
    e.push(perm_entry(24, "S4", 4, &["(1 2 3 4)", "(1 2)"]));
    e.push(regular_spec(
        "Z2xA4",
        GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Alternating(4)]),
    ));
    e.push(regular_spec(
        "Z2xZ2xS3",
        GroupSpec::Product(vec![
            GroupSpec::Cyclic(2),
            GroupSpec::Cyclic(2),
            GroupSpec::Symmetric(3),
        ]),
    ));

    // --- named extras ---
    // dihedral family D_2n for n = 13..=40
    for n in 13..=40u32 {
        e.push(dihedral_entry(2 * n));
    }
    // generalized quaternion and semidihedral to order 64
    e.push(regular_spec("Q32", GroupSpec::Dicyclic(32)));
    e.push(regular_spec("Q64", GroupSpec::Dicyclic(64)));
    e.push(regular_spec("SD32", GroupSpec::Semidihedral(32)));
    e.push(regular_spec("SD64", GroupSpec::Semidihedral(64)));
    // modular maximal-cyclic groups
    e.push(regular_spec("M27", GroupSpec::Metacyclic { m: 9, n: 3, r: 4 }));
    e.push(regular_spec("M32", GroupSpec::Metacyclic { m: 16, n: 2, r: 9 }));
    e.push(regular_spec("M64", GroupSpec::Metacyclic { m: 32, n: 2, r: 17 }));
    e.push(regular_spec("M81", GroupSpec::Metacyclic { m: 27, n: 3, r: 10 }));
    e.push(regular_spec("M125", GroupSpec::Metacyclic { m: 25, n: 5, r: 6 }));
    // extraspecial exponent-p groups
    e.push(regular_spec("Heis(3)", GroupSpec::Heisenberg(3)));
    e.push(regular_spec("Heis(5)", GroupSpec::Heisenberg(5)));
    // ZM samples
    e.push(regular_spec("ZM(7,6,3)", GroupSpec::Metacyclic { m: 7, n: 6, r: 3 }));
    e.push(regular_spec("ZM(11,5,3)", GroupSpec::Metacyclic { m: 11, n: 5, r: 3 }));
    e.push(regular_spec("ZM(13,4,5)", GroupSpec::Metacyclic { m: 13, n: 4, r: 5 }));
    // abelian families to order 512
    let abelian_extras: &[(&str, &[u32])] = &[
        ("Z27", &[27]),
        ("Z9xZ3", &[9, 3]),
        ("Z3xZ3xZ3", &[3, 3, 3]),
        ("Z32", &[32]),
        ("Z16xZ2", &[16, 2]),
        ("Z8xZ4", &[8, 4]),
        ("Z8xZ2xZ2", &[8, 2, 2]),
        ("Z4xZ4xZ2", &[4, 4, 2]),
        ("Z4xZ2xZ2xZ2", &[4, 2, 2, 2]),
        ("Z2xZ2xZ2xZ2xZ2", &[2, 2, 2, 2, 2]),
        ("Z36", &[36]),
        ("Z6xZ6", &[6, 6]),
        ("Z49", &[49]),
        ("Z7xZ7", &[7, 7]),
        ("Z64", &[64]),
        ("Z32xZ2", &[32, 2]),
        ("Z16xZ4", &[16, 4]),
        ("Z16xZ2xZ2", &[16, 2, 2]),
        ("Z8xZ8", &[8, 8]),
        ("Z8xZ4xZ2", &[8, 4, 2]),
        ("Z8xZ2xZ2xZ2", &[8, 2, 2, 2]),
        ("Z4xZ4xZ4", &[4, 4, 4]),
        ("Z4xZ4xZ2xZ2", &[4, 4, 2, 2]),
        ("Z4xZ2xZ2xZ2xZ2", &[4, 2, 2, 2, 2]),
        ("Z2xZ2xZ2xZ2xZ2xZ2", &[2, 2, 2, 2, 2, 2]),
        ("Z72", &[72]),
        ("Z12xZ6", &[12, 6]),
        ("Z81", &[81]),
        ("Z27xZ3", &[27, 3]),
        ("Z9xZ9", &[9, 9]),
        ("Z9xZ3xZ3", &[9, 3, 3]),
        ("Z3xZ3xZ3xZ3", &[3, 3, 3, 3]),
        ("Z100", &[100]),
        ("Z10xZ10", &[10, 10]),
        ("Z4xZ27", &[4, 27]),
        ("Z121", &[121]),
        ("Z11xZ11", &[11, 11]),
        ("Z125", &[125]),
        ("Z25xZ5", &[25, 5]),
        ("Z5xZ5xZ5", &[5, 5, 5]),
        ("Z144", &[144]),
        ("Z12xZ12", &[12, 12]),
        ("Z18xZ6xZ2", &[18, 6, 2]),
        ("Z6xZ6xZ6", &[6, 6, 6]),
        ("Z243", &[243]),
        ("Z81xZ3", &[81, 3]),
        ("Z27xZ9", &[27, 9]),
        ("Z256", &[256]),
        ("Z16xZ16", &[16, 16]),
        ("Z512", &[512]),
        ("Z256xZ2", &[256, 2]),
    ];
    for (name, factors) in abelian_extras {
        e.push(abelian_entry(name, factors));
    }
    // nilpotent groups with two prime divisors
    e.push(regular_spec(
        "Q8xZ9",
        GroupSpec::Product(vec![GroupSpec::Dicyclic(8), GroupSpec::Cyclic(9)]),
    ));
    e.push(regular_spec(
        "D8xZ9",
        GroupSpec::Product(vec![GroupSpec::Dihedral(8), GroupSpec::Cyclic(9)]),
    ));
    e.push(regular_spec(
        "Heis(3)xZ2",
        GroupSpec::Product(vec![GroupSpec::Heisenberg(3), GroupSpec::Cyclic(2)]),
    ));
    e.push(regular_spec(
        "Heis(3)xZ4",
        GroupSpec::Product(vec![GroupSpec::Heisenberg(3), GroupSpec::Cyclic(4)]),
    ));
    e.push(regular_spec(
        "D16xZ9",
        GroupSpec::Product(vec![GroupSpec::Dihedral(16), GroupSpec::Cyclic(9)]),
    ));
    e.push(regular_spec(
        "Q8xZ25",
        GroupSpec::Product(vec![GroupSpec::Dicyclic(8), GroupSpec::Cyclic(25)]),
    ));
    e
}

fn main() {
    let caps = caps();
    let entries = build_entries();

    // realize every entry from its generators, exactly as a consumer would
    let mut groups: Vec<Group> = Vec::new();
    for entry in &entries {
        let spec = GroupSpec::Perm {
            degree: entry.degree as u32,
            gens: entry
                .gens
                .iter()
                .map(|p| (0..p.degree() as u16).map(|i| p.apply(i)).collect())
                .collect(),
        };
        let g = construct(&spec, &caps)
            .unwrap_or_else(|err| panic!("{}: {err}", entry.name));
        assert_eq!(
            g.order(),
            entry.order as usize,
            "{}: generators close to order {}",
            entry.name,
            g.order()
        );
        groups.push(g);
    }

    // pairwise non-isomorphic within each order; counts match the known
    // number of types for orders <= 24
    let mut orders: Vec<u32> = entries.iter().map(|e| e.order).collect();
    orders.sort_unstable();
    orders.dedup();
    for order in orders {
        let ids: Vec<usize> = (0..entries.len())
            .filter(|&i| entries[i].order == order)
            .collect();
        for a in 0..ids.len() {
            for b in a + 1..ids.len() {
                assert!(
                    is_isomorphic(&groups[ids[a]], &groups[ids[b]]).is_none(),
                    "order {order}: {} and {} are isomorphic",
                    entries[ids[a]].name,
                    entries[ids[b]].name
                );
            }
        }
        if order as usize <= TYPE_COUNTS.len() {
            assert_eq!(
                ids.len(),
                TYPE_COUNTS[order as usize - 1],
                "order {order}: wrong number of entries"
            );
        }
    }

    let mut out = String::new();
    out.push_str("# Small-groups catalog: order:index:name:degree:generators\n");
    out.push_str("# Complete per order for every order up to the bound below;\n");
    out.push_str("# entries beyond it are named extras.\n");
    out.push_str("# Regenerate with: cargo run --bin gen_catalog\n");
    out.push_str("complete_to: 24\n");
    let mut by_order: Vec<(u32, u32, &Entry)> = Vec::new();
    {
        let mut next_index = std::collections::BTreeMap::new();
        let mut sorted: Vec<&Entry> = entries.iter().collect();
        sorted.sort_by_key(|e| e.order);
        for entry in sorted {
            let idx = next_index.entry(entry.order).or_insert(0u32);
            *idx += 1;
            by_order.push((entry.order, *idx, entry));
        }
    }
    for (order, index, entry) in by_order {
        let gens: Vec<String> = entry.gens.iter().map(|p| p.to_cycles()).collect();
        out.push_str(&format!(
            "{order}:{index}:{}:{}:{}\n",
            entry.name,
            entry.degree,
            gens.join(";")
        ));
    }

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.txt");
    std::fs::write(path, &out).expect("write catalog");
    println!(
        "wrote {} entries to {path}",
        entries.len()
    );
}
