//! Small-groups catalog: plain-text entries `order:index:name:degree:gens`
//! with cycle-notation generators, complete per order up to a declared bound.

use crate::error::Error;
use crate::group::{construct, direct_product, Group, GroupSpec};
use crate::perm::{close_generators, Perm};
use crate::{Caps, Result};
use std::collections::BTreeSet;
use std::path::Path;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub order: u32,
    pub index: u32,
    pub name: String,
    pub degree: u32,
    pub gens: Vec<Perm>,
}

impl CatalogEntry {
    pub fn spec(&self) -> GroupSpec {
        GroupSpec::Perm {
            degree: self.degree,
            gens: self
                .gens
                .iter()
                .map(|p| (0..p.degree() as u16).map(|i| p.apply(i)).collect())
                .collect(),
        }
    }

    pub fn group(&self, caps: &Caps) -> Result<Group> {
        let mut g = construct(&self.spec(), caps)?;
        g.spec = Some(GroupSpec::CatalogRef {
            order: self.order,
            index: self.index,
        });
        Ok(g)
    }
}

/// A parsed catalog. Entries are sorted by (order, index); every order up to
/// `complete_to` is covered completely (one entry per isomorphism type).
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub complete_to: u32,
}

impl Catalog {
    pub fn entry(&self, order: u32, index: u32) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.order == order && e.index == index)
            .ok_or(Error::CatalogRefNotFound { order, index })
    }

    pub fn of_order(&self, order: u32) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.order == order)
    }

    /// Construct a spec, resolving catalog references (also inside products).
    pub fn resolve(&self, spec: &GroupSpec, caps: &Caps) -> Result<Group> {
        match spec {
            GroupSpec::CatalogRef { order, index } => {
                self.entry(*order, *index)?.group(caps)
            }
            GroupSpec::Product(parts) => {
                let mut acc = construct(&GroupSpec::Cyclic(1), caps)?;
                for p in parts {
                    let g = self.resolve(p, caps)?;
                    acc = direct_product(&acc, &g, caps)?;
                }
                acc.spec = Some(spec.clone());
                Ok(acc)
            }
            other => construct(other, caps),
        }
    }
}

/// Parse and validate catalog text: each entry's generators must close to the
/// declared order, and (order, index) must be unique.
pub fn parse_catalog(text: &str, caps: &Caps) -> Result<Catalog> {
    let mut entries = Vec::new();
    let mut complete_to = 0u32;
    let mut seen: BTreeSet<(u32, u32)> = BTreeSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::ParseError { line: lineno, msg };
        if let Some(rest) = line.strip_prefix("complete_to:") {
            complete_to = rest
                .trim()
                .parse()
                .map_err(|_| err("invalid complete_to value".into()))?;
            continue;
        }
        // order and index from the front; gens and degree from the back; the
        // name in the middle may itself contain ':'
        let (order_s, rest) = line
            .split_once(':')
            .ok_or_else(|| err("expected order:index:name:degree:gens".into()))?;
        let (index_s, rest) = rest
            .split_once(':')
            .ok_or_else(|| err("missing index field".into()))?;
        let (rest, gens_s) = rest
            .rsplit_once(':')
            .ok_or_else(|| err("missing generators field".into()))?;
        let (name, degree_s) = rest
            .rsplit_once(':')
            .ok_or_else(|| err("missing degree field".into()))?;
        let order: u32 = order_s
            .trim()
            .parse()
            .map_err(|_| err(format!("invalid order '{order_s}'")))?;
        let index: u32 = index_s
            .trim()
            .parse()
            .map_err(|_| err(format!("invalid index '{index_s}'")))?;
        let degree: u32 = degree_s
            .trim()
            .parse()
            .map_err(|_| err(format!("invalid degree '{degree_s}'")))?;
        let name = name.trim().to_string();
        if name.is_empty() {
            return Err(err("empty name".into()));
        }
        let gens: Vec<Perm> = gens_s
            .split(';')
            .map(|s| {
                Perm::parse_cycles(s.trim(), degree as usize)
                    .map_err(|e| err(format!("bad generator '{}': {e}", s.trim())))
            })
            .collect::<Result<_>>()?;
        if gens.is_empty() {
            return Err(err("no generators".into()));
        }
        if !seen.insert((order, index)) {
            return Err(err(format!("duplicate entry ({order},{index})")));
        }
        let closed = close_generators(degree as usize, &gens, caps.table_cap)?;
        if closed.len() != order as usize {
            return Err(Error::OrderMismatch {
                order,
                index,
                actual: closed.len(),
            });
        }
        entries.push(CatalogEntry {
            order,
            index,
            name,
            degree,
            gens,
        });
    }
    entries.sort_by_key(|e| (e.order, e.index));
    Ok(Catalog {
        entries,
        complete_to,
    })
}

pub fn load_catalog(path: &Path, caps: &Caps) -> Result<Catalog> {
    let text = std::fs::read_to_string(path)?;
    parse_catalog(&text, caps)
}

/// The shipped catalog: complete through order 24, plus named extras.
pub fn builtin_catalog(caps: &Caps) -> Result<Catalog> {
    parse_catalog(include_str!("../data/catalog.txt"), caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::invariants;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn parse_minimal() {
        let text = "\
# comment
complete_to: 2

1:1:1:1:()
2:1:Z2:2:(1 2)
";
        let c = parse_catalog(text, &caps()).unwrap();
        assert_eq!(c.complete_to, 2);
        assert_eq!(c.entries.len(), 2);
        let g = c.entry(2, 1).unwrap().group(&caps()).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn order_mismatch_rejected() {
        let text = "16:1:bad:4:(1 2 3)";
        match parse_catalog(text, &caps()) {
            Err(Error::OrderMismatch { actual, .. }) => assert_eq!(actual, 3),
            other => panic!("expected order mismatch, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_rejected() {
        let text = "2:1:Z2:2:(1 2)\n2:1:Z2:2:(1 2)";
        assert!(matches!(
            parse_catalog(text, &caps()),
            Err(Error::ParseError { .. })
        ));
    }

    #[test]
    fn name_may_contain_colon() {
        let text = "6:2:C3:C2:3:(1 2 3);(2 3)";
        let c = parse_catalog(text, &caps()).unwrap();
        assert_eq!(c.entries[0].name, "C3:C2");
        let g = c.entries[0].group(&caps()).unwrap();
        assert!(!invariants(&g).abelian);
    }

    #[test]
    fn empty_catalog() {
        let c = parse_catalog("", &caps()).unwrap();
        assert!(c.entries.is_empty());
        assert!(matches!(
            c.entry(4, 1),
            Err(Error::CatalogRefNotFound { .. })
        ));
    }

    #[test]
    fn builtin_complete_counts() {
        let c = builtin_catalog(&caps()).unwrap();
        assert_eq!(c.complete_to, 24);
        // one entry per isomorphism type at the orders the suites lean on
        assert_eq!(c.of_order(12).count(), 5);
        assert_eq!(c.of_order(16).count(), 14);
        assert_eq!(c.of_order(24).count(), 15);
        let q8 = c
            .entries
            .iter()
            .find(|e| e.name == "Q8")
            .unwrap()
            .group(&caps())
            .unwrap();
        assert_eq!(invariants(&q8).element_order_histogram[&4], 6);
    }

    #[test]
    fn resolve_product_with_ref() {
        let text = "complete_to: 2\n2:1:Z2:2:(1 2)";
        let c = parse_catalog(text, &caps()).unwrap();
        let spec = GroupSpec::Product(vec![
            GroupSpec::CatalogRef { order: 2, index: 1 },
            GroupSpec::Cyclic(3),
        ]);
        let g = c.resolve(&spec, &caps()).unwrap();
        assert_eq!(g.order(), 6);
        assert!(invariants(&g).abelian);
    }
}
