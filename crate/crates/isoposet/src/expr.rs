//! Surface syntax for group expressions: `Z12`, `D8 x Z3`, `ZM(7,3,2)`,
//! `G(16,5)`, with `x` or the multiplication sign for direct products.

use crate::error::Error;
use crate::group::{gcd, pow_mod, GroupSpec};
use crate::Result;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Parser<'a> {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, msg: &str) -> Error {
        Error::SyntaxError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|_| Error::SyntaxError {
                pos: start,
                msg: "number out of range".to_string(),
            })
    }

    /// Consume an identifier of ASCII letters.
    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn term(&mut self) -> Result<GroupSpec> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                match name.as_str() {
                    "Z" => Ok(GroupSpec::Cyclic(self.positive()?)),
                    "D" => {
                        let n = self.positive()?;
                        if n % 2 != 0 {
                            return Err(Error::InvalidSpec(format!(
                                "D{n}: dihedral order must be even"
                            )));
                        }
                        Ok(GroupSpec::Dihedral(n))
                    }
                    "Q" => {
                        let n = self.positive()?;
                        if n % 4 != 0 || n < 8 {
                            return Err(Error::InvalidSpec(format!(
                                "Q{n}: dicyclic order must be a multiple of 4, at least 8"
                            )));
                        }
                        Ok(GroupSpec::Dicyclic(n))
                    }
                    "SD" => {
                        let n = self.positive()?;
                        if !n.is_power_of_two() || n < 16 {
                            return Err(Error::InvalidSpec(format!(
                                "SD{n}: semidihedral order must be 2^k, k >= 4"
                            )));
                        }
                        Ok(GroupSpec::Semidihedral(n))
                    }
                    "S" => Ok(GroupSpec::Symmetric(self.positive()?)),
                    "A" => Ok(GroupSpec::Alternating(self.positive()?)),
                    "M" => {
                        let n = self.positive()?;
                        let factors = crate::group::factorize(n as u64);
                        let (p, a) = match factors.as_slice() {
                            [(p, a)] if *a >= 3 => (*p, *a),
                            _ => {
                                return Err(Error::InvalidSpec(format!(
                                    "M{n}: modular group order must be p^a with a >= 3"
                                )))
                            }
                        };
                        Ok(GroupSpec::Metacyclic {
                            m: p.pow(a - 1) as u32,
                            n: p as u32,
                            r: (1 + p.pow(a - 2)) as u32,
                        })
                    }
                    "ZM" => {
                        self.expect(b'(')?;
                        let m = self.positive()?;
                        self.expect(b',')?;
                        let n = self.positive()?;
                        self.expect(b',')?;
                        let r = self.positive()?;
                        self.expect(b')')?;
                        if gcd(r as u64, m as u64) != 1
                            || pow_mod(r as u64, n as u64, m as u64) != 1 % m as u64
                        {
                            return Err(Error::InvalidSpec(format!(
                                "ZM({m},{n},{r}): need gcd(r,m)=1 and r^n = 1 mod m"
                            )));
                        }
                        Ok(GroupSpec::Metacyclic { m, n, r })
                    }
                    "Heis" => {
                        self.expect(b'(')?;
                        let p = self.positive()?;
                        self.expect(b')')?;
                        if !crate::group::is_prime(p as u64) {
                            return Err(Error::InvalidSpec(format!(
                                "Heis({p}): argument must be prime"
                            )));
                        }
                        Ok(GroupSpec::Heisenberg(p))
                    }
                    "G" => {
                        self.expect(b'(')?;
                        let order = self.positive()?;
                        self.expect(b',')?;
                        let index = self.positive()?;
                        self.expect(b')')?;
                        Ok(GroupSpec::CatalogRef { order, index })
                    }
                    "" => Err(self.syntax("expected a group term")),
                    other => Err(self.syntax(&format!("unknown group family '{other}'"))),
                }
            }
            _ => Err(self.syntax("expected a group term")),
        }
    }

    fn positive(&mut self) -> Result<u32> {
        let n = self.number()?;
        if n == 0 {
            return Err(self.syntax("expected a positive number"));
        }
        Ok(n)
    }

    /// `x` or the Unicode multiplication sign.
    fn product_sign(&mut self) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b'x') {
            self.pos += 1;
            return true;
        }
        // U+00D7 in UTF-8 is 0xC3 0x97
        if self.src.get(self.pos) == Some(&0xC3) && self.src.get(self.pos + 1) == Some(&0x97) {
            self.pos += 2;
            return true;
        }
        false
    }

    fn expr(&mut self) -> Result<GroupSpec> {
        let mut terms = vec![self.term()?];
        while self.product_sign() {
            terms.push(self.term()?);
        }
        if terms.len() == 1 {
            return Ok(terms.pop().unwrap());
        }
        // flatten an all-cyclic product into an Abelian spec
        let mut cyclic_orders = Vec::new();
        for t in &terms {
            match t {
                GroupSpec::Cyclic(n) => cyclic_orders.push(*n),
                GroupSpec::Abelian(v) => cyclic_orders.extend(v.iter().copied()),
                _ => return Ok(GroupSpec::Product(terms)),
            }
        }
        Ok(GroupSpec::Abelian(cyclic_orders))
    }
}

pub fn parse_group_expr(text: &str) -> Result<GroupSpec> {
    let mut p = Parser::new(text);
    let spec = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax("trailing input"));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_terms() {
        assert_eq!(parse_group_expr("Z12").unwrap(), GroupSpec::Cyclic(12));
        assert_eq!(parse_group_expr(" D8 ").unwrap(), GroupSpec::Dihedral(8));
        assert_eq!(parse_group_expr("Q16").unwrap(), GroupSpec::Dicyclic(16));
        assert_eq!(
            parse_group_expr("SD32").unwrap(),
            GroupSpec::Semidihedral(32)
        );
        assert_eq!(parse_group_expr("S4").unwrap(), GroupSpec::Symmetric(4));
        assert_eq!(parse_group_expr("A5").unwrap(), GroupSpec::Alternating(5));
        assert_eq!(parse_group_expr("Heis(3)").unwrap(), GroupSpec::Heisenberg(3));
        assert_eq!(
            parse_group_expr("G(16,5)").unwrap(),
            GroupSpec::CatalogRef {
                order: 16,
                index: 5
            }
        );
    }

    #[test]
    fn modular_group() {
        assert_eq!(
            parse_group_expr("M27").unwrap(),
            GroupSpec::Metacyclic { m: 9, n: 3, r: 4 }
        );
        assert_eq!(
            parse_group_expr("M16").unwrap(),
            GroupSpec::Metacyclic { m: 8, n: 2, r: 5 }
        );
        assert!(matches!(
            parse_group_expr("M12"),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn zm_validation() {
        assert_eq!(
            parse_group_expr("ZM(7,3,2)").unwrap(),
            GroupSpec::Metacyclic { m: 7, n: 3, r: 2 }
        );
        assert!(matches!(
            parse_group_expr("ZM(7,3,3)"),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn products() {
        assert_eq!(
            parse_group_expr("Z2 x Z6 x Z18").unwrap(),
            GroupSpec::Abelian(vec![2, 6, 18])
        );
        assert_eq!(
            parse_group_expr("Z2\u{d7}Z4").unwrap(),
            GroupSpec::Abelian(vec![2, 4])
        );
        assert_eq!(
            parse_group_expr("D8 x Z3").unwrap(),
            GroupSpec::Product(vec![GroupSpec::Dihedral(8), GroupSpec::Cyclic(3)])
        );
        assert_eq!(
            parse_group_expr("(Z2 x Z2) x Z3").unwrap(),
            GroupSpec::Abelian(vec![2, 2, 3])
        );
    }

    #[test]
    fn odd_dihedral_rejected() {
        assert!(matches!(
            parse_group_expr("D7"),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_group_expr("Z2 x ") {
            Err(Error::SyntaxError { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            parse_group_expr("Z2 junk"),
            Err(Error::SyntaxError { .. })
        ));
        assert!(matches!(
            parse_group_expr(""),
            Err(Error::SyntaxError { .. })
        ));
    }
}
