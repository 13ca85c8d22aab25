//! Parser for group-algebra expressions such as `id - t12 + 3/2*c1`.
//!
//! Grammar (whitespace is ignored everywhere):
//!
//! ```text
//! expr  := "0" | ["+" | "-"] term (("+" | "-") term)*
//! term  := [rational "*"] name
//! name  := "id" | "t12" | "t13" | "t23" | "c1" | "c2"
//! ```

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sym3::{GroupAlgElem, Perm3};

pub fn parse_ga_expr(text: &str) -> Result<GroupAlgElem> {
    // Positions reported in errors refer to the original text.
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.len() == 1 && chars[0].1 == '0' {
        return Ok(GroupAlgElem::zero());
    }
    let mut parser = Parser {
        chars: &chars,
        pos: 0,
        end: text.len(),
    };
    parser.expr()
}

impl FromStr for GroupAlgElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_ga_expr(s)
    }
}

struct Parser<'a> {
    chars: &'a [(usize, char)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn error_here(&self) -> Error {
        let token: String = self.chars[self.pos.min(self.chars.len())..]
            .iter()
            .map(|&(_, c)| c)
            .take_while(|c| !matches!(c, '+' | '-'))
            .collect();
        Error::UnknownToken {
            position: self.offset(),
            token: if token.is_empty() {
                "<end of input>".to_string()
            } else {
                token
            },
        }
    }

    fn expr(&mut self) -> Result<GroupAlgElem> {
        let mut acc = GroupAlgElem::zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                None if !first => return Ok(acc),
                _ if first => false,
                _ => return Err(self.error_here()),
            };
            let term = self.term()?;
            acc = if negative { acc - term } else { acc + term };
            first = false;
        }
    }

    fn term(&mut self) -> Result<GroupAlgElem> {
        let coefficient = match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '+' || c == '-' => Some(self.coefficient()?),
            _ => None,
        };
        let name = self.name()?;
        let elem = GroupAlgElem::basis(name);
        Ok(match coefficient {
            Some(c) => elem.scaled(&c),
            None => elem,
        })
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let start = self.pos;
        let mut literal = String::new();
        while let Some(c) = self.peek() {
            if c == '*' {
                break;
            }
            if !(c.is_ascii_digit() || c == '/' || ((c == '+' || c == '-') && literal.is_empty())) {
                break;
            }
            literal.push(c);
            self.pos += 1;
        }
        let value: Rational = literal.parse()?;
        if self.peek() != Some('*') {
            self.pos = start;
            return Err(self.error_here());
        }
        self.pos += 1;
        Ok(value)
    }

    fn name(&mut self) -> Result<Perm3> {
        for p in Perm3::ALL {
            let token = p.name();
            let matches = token
                .chars()
                .enumerate()
                .all(|(k, c)| self.chars.get(self.pos + k).map(|&(_, x)| x) == Some(c));
            if matches {
                self.pos += token.len();
                // A name must be followed by a sign or the end of input.
                return match self.peek() {
                    None | Some('+') | Some('-') => Ok(p),
                    _ => {
                        self.pos -= token.len();
                        Err(self.error_here())
                    }
                };
            }
        }
        Err(self.error_here())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym3::special_vector;
    use proptest::prelude::*;

    #[test]
    fn special_vectors_parse() {
        assert_eq!(
            parse_ga_expr("id - t12 - t13 - t23 + c1 + c2").unwrap(),
            special_vector("V").unwrap()
        );
        assert_eq!(
            parse_ga_expr("id + t12 + t13 + t23 + c1 + c2").unwrap(),
            special_vector("W").unwrap()
        );
    }

    #[test]
    fn coefficients() {
        let half = Rational::new(1, 2).unwrap();
        let z = Rational::zero();
        assert_eq!(
            parse_ga_expr("3/2*c1 - c1").unwrap(),
            GroupAlgElem::from_coords([z.clone(), z.clone(), z.clone(), z.clone(), half, z])
        );
        assert_eq!(
            parse_ga_expr(" - 2 * t12+-1*t12 ").unwrap(),
            GroupAlgElem::from_integers([0, -3, 0, 0, 0, 0])
        );
        assert_eq!(parse_ga_expr("id - id").unwrap(), GroupAlgElem::zero());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_ga_expr("id + t14"),
            Err(Error::UnknownToken { position: 5, .. })
        ));
        assert!(matches!(
            parse_ga_expr("x"),
            Err(Error::UnknownToken { .. })
        ));
        assert!(matches!(parse_ga_expr(""), Err(Error::UnknownToken { .. })));
        assert!(matches!(
            parse_ga_expr("id +"),
            Err(Error::UnknownToken { .. })
        ));
        assert!(matches!(
            parse_ga_expr("id c1"),
            Err(Error::UnknownToken { .. })
        ));
        assert!(matches!(
            parse_ga_expr("2 c1"),
            Err(Error::UnknownToken { .. })
        ));
        assert!(matches!(
            parse_ga_expr("1/0*c1"),
            Err(Error::MalformedRational(_))
        ));
        assert!(matches!(
            parse_ga_expr("1.5*c1"),
            Err(Error::UnknownToken { .. })
        ));
        assert!(matches!(
            parse_ga_expr("idc1"),
            Err(Error::UnknownToken { .. })
        ));
    }

    proptest! {
        #[test]
        fn display_parses_back(coords in prop::array::uniform6((-20i64..20, 1i64..6))) {
            let v = GroupAlgElem::from_coords(coords.map(|(n, d)| Rational::new(n, d).unwrap()));
            prop_assert_eq!(parse_ga_expr(&v.to_string()).unwrap(), v);
        }
    }
}
