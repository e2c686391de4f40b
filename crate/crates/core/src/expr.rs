//! Text syntax for monomial ideals.
//!
//! ```text
//! IDEAL  := '(' MONO (',' MONO)* ')' | '{' VEC (',' VEC)* '}'
//! MONO   := factor ('*' factor)* | '1'
//! factor := var ('^' uint)?
//! VEC    := '[' uint (',' uint)* ']'
//! ```
//!
//! Whitespace is ignored. Variables are either the letters `x, y, z, w`
//! (indices 0..4) or `x1, x2, ...`; the two styles cannot be mixed. `(0)`
//! and `{}` denote the zero ideal, `(1)` the unit ideal.

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal, MAX_DIM};

const LETTERS: [char; 4] = ['x', 'y', 'z', 'w'];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Style {
    Letters,
    Indexed,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
    style: Option<Style>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            text,
            style: None,
        }
    }

    /// Byte offset of the current token (end of input when exhausted).
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.text.len(), |&(i, _)| i)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn uint(&mut self) -> Result<u32> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value * 10 + d as u64;
            if value > u32::MAX as u64 {
                self.pos = start;
                return self.error("integer too large");
            }
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected an unsigned integer");
        }
        Ok(value as u32)
    }

    fn set_style(&mut self, style: Style, at: usize) -> Result<()> {
        match self.style {
            Some(s) if s != style => Err(Error::Syntax {
                position: at,
                message: "cannot mix x,y,z,w with x1,x2,... variable names".into(),
            }),
            _ => {
                self.style = Some(style);
                Ok(())
            }
        }
    }

    /// Zero-based variable index.
    fn variable(&mut self) -> Result<usize> {
        let at = self.offset();
        let Some(c) = self.peek() else {
            return self.error("expected a variable");
        };
        let Some(letter) = LETTERS.iter().position(|&l| l == c) else {
            return self.error(format!("unknown variable '{c}'"));
        };
        self.pos += 1;
        if c == 'x' && self.peek().is_some_and(|d| d.is_ascii_digit()) {
            self.set_style(Style::Indexed, at)?;
            let i = self.uint()?;
            if i == 0 || i as usize > MAX_DIM {
                return Err(Error::Syntax {
                    position: at,
                    message: format!("variable index must be in 1..={MAX_DIM}"),
                });
            }
            return Ok(i as usize - 1);
        }
        self.set_style(Style::Letters, at)?;
        Ok(letter)
    }

    /// Sparse monomial as `(index, exponent)` pairs; `None` for the literal `0`.
    fn monomial(&mut self) -> Result<Option<Vec<(usize, u32)>>> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let at = self.offset();
            return match self.uint()? {
                1 => Ok(Some(Vec::new())),
                0 => Ok(None),
                _ => Err(Error::Syntax {
                    position: at,
                    message: "coefficients are not allowed; only 0 and 1 may appear alone".into(),
                }),
            };
        }
        let mut factors = Vec::new();
        loop {
            let v = self.variable()?;
            let e = if self.eat('^') { self.uint()? } else { 1 };
            factors.push((v, e));
            if !self.eat('*') {
                break;
            }
        }
        Ok(Some(factors))
    }

    fn end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{c}' after the ideal")),
        }
    }
}

fn resolve_dim(inferred: usize, forced: Option<usize>) -> Result<usize> {
    match forced {
        Some(n) if n < inferred => Err(Error::input(format!(
            "expression uses {inferred} variables but n = {n}"
        ))),
        Some(n) => Ok(n),
        None => Ok(inferred.max(1)),
    }
}

fn dense(sparse: &[(usize, u32)], n: usize) -> Result<ExponentVector> {
    let mut v = vec![0u32; n];
    for &(i, e) in sparse {
        v[i] = v[i]
            .checked_add(e)
            .ok_or_else(|| Error::input("exponent overflow"))?;
    }
    Ok(ExponentVector::new(v))
}

/// Parses an ideal expression. `n` forces the number of variables; otherwise
/// it is one more than the largest variable index used.
pub fn parse_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let mut p = Parser::new(text);
    match p.peek() {
        Some('(') => {
            p.pos += 1;
            let mut monos = Vec::new();
            loop {
                monos.push(p.monomial()?);
                if !p.eat(',') {
                    break;
                }
            }
            p.expect(')')?;
            p.end()?;
            let inferred = monos
                .iter()
                .flatten()
                .flat_map(|m| m.iter().map(|&(i, _)| i + 1))
                .max()
                .unwrap_or(0);
            let n = resolve_dim(inferred, n)?;
            let gens = monos
                .iter()
                .flatten()
                .map(|m| dense(m, n))
                .collect::<Result<Vec<_>>>()?;
            MonomialIdeal::new(n, gens)
        }
        Some('{') => {
            p.pos += 1;
            let mut vecs: Vec<(usize, Vec<u32>)> = Vec::new();
            if !p.eat('}') {
                loop {
                    let at = p.offset();
                    p.expect('[')?;
                    let mut v = vec![p.uint()?];
                    while p.eat(',') {
                        v.push(p.uint()?);
                    }
                    p.expect(']')?;
                    vecs.push((at, v));
                    if !p.eat(',') {
                        break;
                    }
                }
                p.expect('}')?;
            }
            p.end()?;
            let n = match (vecs.first(), n) {
                (Some((_, v)), Some(forced)) if v.len() != forced => {
                    return Err(Error::input(format!(
                        "vectors have length {} but n = {forced}",
                        v.len()
                    )))
                }
                (Some((_, v)), _) => v.len(),
                (None, Some(n)) => n,
                (None, None) => 1,
            };
            for (at, v) in &vecs {
                if v.len() != n {
                    return Err(Error::Syntax {
                        position: *at,
                        message: format!("vector of length {} in an ideal of dimension {n}", v.len()),
                    });
                }
            }
            let gens = vecs.into_iter().map(|(_, v)| ExponentVector::new(v)).collect();
            MonomialIdeal::new(n, gens)
        }
        Some(c) => p.error(format!("an ideal starts with '(' or '{{', found '{c}'")),
        None => p.error("empty input"),
    }
}

/// Default variable names: `x, y, z, w` up to four variables, else
/// `x1, ..., xn`.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= LETTERS.len() {
        LETTERS[..n].iter().map(|c| c.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

pub fn print_monomial(m: &ExponentVector, names: &[String]) -> String {
    if m.is_zero() {
        return "1".into();
    }
    m.entries()
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, name)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// `(g1, g2, ...)` with generators in graded-lex order; `(0)` for the zero
/// ideal.
pub fn print_ideal(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "(0)".into();
    }
    let names = match ideal.variable_names() {
        Some(names) => names.to_vec(),
        None => default_names(ideal.ambient_dim()),
    };
    let gens: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| print_monomial(g, &names))
        .collect();
    format!("({})", gens.join(", "))
}

/// `{[a, b], ...}`: the machine form, which fixes the dimension.
pub fn print_ideal_vectors(ideal: &MonomialIdeal) -> String {
    let vecs: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| {
            let e: Vec<String> = g.entries().iter().map(u32::to_string).collect();
            format!("[{}]", e.join(","))
        })
        .collect();
    format!("{{{}}}", vecs.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_vecs(n, gens).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(parse_ideal("(x^2, y^3)", None).unwrap(), ideal(2, &[&[2, 0], &[0, 3]]));
        let a = parse_ideal("{[4,0],[1,2],[0,4]}", None).unwrap();
        assert_eq!(a, ideal(2, &[&[4, 0], &[1, 2], &[0, 4]]));
        assert_eq!(a.to_string(), "(x*y^2, x^4, y^4)");
        let q = parse_ideal("(x*y, y*z, x*z)", None).unwrap();
        assert_eq!(q, ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]));
    }

    #[test]
    fn dimension_inference() {
        assert_eq!(parse_ideal("(y)", None).unwrap().ambient_dim(), 2);
        assert_eq!(parse_ideal("(x)", Some(3)).unwrap().ambient_dim(), 3);
        assert_eq!(parse_ideal("(x5^2)", None).unwrap().ambient_dim(), 5);
        assert_eq!(parse_ideal("(x1*x2)", None).unwrap(), ideal(2, &[&[1, 1]]));
        assert!(parse_ideal("(z)", Some(2)).is_err());
        assert!(parse_ideal("{[1,2]}", Some(3)).is_err());
    }

    #[test]
    fn special_ideals() {
        assert!(parse_ideal("(1)", Some(2)).unwrap().is_unit());
        assert!(parse_ideal("(0)", Some(2)).unwrap().is_zero());
        assert!(parse_ideal("{}", Some(2)).unwrap().is_zero());
        assert_eq!(MonomialIdeal::unit(2).to_string(), "(1)");
        assert_eq!(MonomialIdeal::zero(2).to_string(), "(0)");
        // x^0 is the constant 1
        assert!(parse_ideal("(x^0)", None).unwrap().is_unit());
    }

    #[test]
    fn repeated_variables_multiply() {
        assert_eq!(parse_ideal("(x*x^2*y)", None).unwrap(), ideal(2, &[&[3, 1]]));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let cases = [
            ("(x^2, y^)", 8),
            ("x^2", 0),
            ("(x^2 y)", 5),
            ("(x, y", 5),
            ("(x, q)", 4),
            ("{[1,2],[3]}", 7),
            ("(x, y) z", 7),
            ("(2*x)", 1),
            ("(x*x1)", 3),
        ];
        for (text, pos) in cases {
            match parse_ideal(text, None) {
                Err(Error::Syntax { position, .. }) => assert_eq!(position, pos, "{text}"),
                other => panic!("{text}: expected a syntax error, got {other:?}"),
            }
        }
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(parse_ideal("(x^65)", None).is_err());
        assert!(parse_ideal("(x9)", None).is_err());
        assert!(parse_ideal("(x^99999999999)", None).is_err());
    }

    #[test]
    fn printing_many_variables() {
        let a = ideal(5, &[&[1, 0, 0, 0, 2], &[0, 0, 3, 0, 0]]);
        assert_eq!(a.to_string(), "(x1*x5^2, x3^3)");
        assert_eq!(parse_ideal(&a.to_string(), Some(5)).unwrap(), a);
        assert_eq!(parse_ideal(&print_ideal_vectors(&a), None).unwrap(), a);
    }
}
