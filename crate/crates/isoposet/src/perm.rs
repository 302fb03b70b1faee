//! Permutations in image form, disjoint-cycle text notation, and closure of
//! generator sets into full element lists.

use crate::error::Error;
use crate::Result;
use std::collections::HashMap;

/// A permutation of `0..degree`, stored as the image vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if (i as usize) >= images.len() || seen[i as usize] {
                return Err(Error::InvalidSpec(format!(
                    "not a permutation: images {images:?}"
                )));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: u16) -> u16 {
        self.images[i as usize]
    }

    /// Function composition: `(a.compose(b))(x) = a(b(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u16 == x)
    }

    pub fn is_even(&self) -> bool {
        // parity from cycle decomposition
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions.is_multiple_of(2)
    }

    /// Parse disjoint-cycle notation over points `1..=degree`, e.g. `(1 2)(3 4)`.
    /// `()` denotes the identity. Commas are accepted as separators too.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut touched = vec![false; degree];
        let mut chars = text.char_indices().peekable();
        let bad = |pos: usize, msg: &str| Error::SyntaxError {
            pos,
            msg: msg.to_string(),
        };
        while let Some(&(pos, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c != '(' {
                return Err(bad(pos, "expected '('"));
            }
            chars.next();
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_whitespace() || c == ',' {
                        chars.next();
                    } else {
                        break;
                    }
                }
                match chars.peek() {
                    Some(&(_, ')')) => {
                        chars.next();
                        break;
                    }
                    Some(&(pos, c)) if c.is_ascii_digit() => {
                        let mut val = 0usize;
                        while let Some(&(_, d)) = chars.peek() {
                            if let Some(v) = d.to_digit(10) {
                                val = val * 10 + v as usize;
                                chars.next();
                            } else {
                                break;
                            }
                        }
                        if val == 0 || val > degree {
                            return Err(bad(pos, "point out of range 1..=degree"));
                        }
                        if touched[val - 1] {
                            return Err(bad(pos, "point repeated across cycles"));
                        }
                        touched[val - 1] = true;
                        cycle.push(val - 1);
                    }
                    Some(&(pos, _)) => return Err(bad(pos, "expected point or ')'")),
                    None => return Err(bad(text.len(), "unterminated cycle")),
                }
            }
            for k in 0..cycle.len() {
                images[cycle[k]] = cycle[(k + 1) % cycle.len()] as u16;
            }
        }
        Perm::from_images(images)
    }

    /// Disjoint-cycle notation over points `1..=degree`; identity prints `()`.
    pub fn to_cycles(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(i + 1).to_string());
                first = false;
                i = self.images[i] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Breadth-first closure of a generator set into the full element list.
/// The identity comes first; the rest follow in BFS discovery order, which is
/// deterministic for a fixed generator sequence.
pub fn close_generators(degree: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Perm, usize> = HashMap::new();
    index.insert(id, 0);
    let mut frontier = 0usize;
    while frontier < elems.len() {
        let current = elems[frontier].clone();
        for g in gens {
            let next = g.compose(&current);
            if !index.contains_key(&next) {
                if elems.len() >= cap {
                    return Err(Error::OrderCapExceeded {
                        order: (elems.len() + 1) as u64,
                        cap,
                    });
                }
                index.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
        frontier += 1;
    }
    Ok(elems)
}

/// Parse the permutation generator text format: a header line `degree: k`
/// followed by one generator per line in disjoint-cycle notation.
pub fn parse_perm_file(text: &str) -> Result<(usize, Vec<Perm>)> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if degree.is_none() {
            let rest = line.strip_prefix("degree:").ok_or(Error::ParseError {
                line: lineno + 1,
                msg: "expected header line `degree: k`".to_string(),
            })?;
            let d: usize = rest.trim().parse().map_err(|_| Error::ParseError {
                line: lineno + 1,
                msg: "invalid degree".to_string(),
            })?;
            degree = Some(d);
        } else {
            let d = degree.unwrap();
            gens.push(Perm::parse_cycles(line, d).map_err(|e| Error::ParseError {
                line: lineno + 1,
                msg: e.to_string(),
            })?);
        }
    }
    match degree {
        Some(d) => Ok((d, gens)),
        None => Err(Error::ParseError {
            line: 0,
            msg: "missing `degree: k` header".to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse_cycles("(1 2)(3 4)", 5).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(4), 4);
        assert_eq!(p.to_cycles(), "(1 2)(3 4)");
        assert!(Perm::parse_cycles("(1 2", 4).is_err());
        assert!(Perm::parse_cycles("(1 2)(2 3)", 4).is_err());
        assert!(Perm::parse_cycles("(1 5)", 4).is_err());
    }

    #[test]
    fn closure_of_s3() {
        let a = Perm::parse_cycles("(1 2 3)", 3).unwrap();
        let b = Perm::parse_cycles("(1 2)", 3).unwrap();
        let elems = close_generators(3, &[a, b], 100).unwrap();
        assert_eq!(elems.len(), 6);
        assert!(elems[0].is_identity());
    }

    #[test]
    fn perm_file_format() {
        let (d, gens) = parse_perm_file("degree: 4\n(1 2)(3 4)\n(1 3)\n").unwrap();
        assert_eq!(d, 4);
        assert_eq!(gens.len(), 2);
        assert!(parse_perm_file("(1 2)\n").is_err());
    }

    #[test]
    fn parity() {
        assert!(Perm::parse_cycles("(1 2 3)", 3).unwrap().is_even());
        assert!(!Perm::parse_cycles("(1 2)", 3).unwrap().is_even());
    }
}
