//! Reader for presentation files. See the README for the grammar.

use std::fmt;

use lgcone_core::exactla::{Matrix, Rational};
use lgcone_core::exterior::Form;
use num::{BigInt, One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// A parsed but not yet validated presentation.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub name: String,
    pub names: Vec<String>,
    pub de: Vec<Form<Rational>>,
    pub j: Matrix<Rational>,
    pub metrics: Vec<(String, Form<Rational>)>,
    /// Source lines of the `d` equations, the `J` section and the metrics,
    /// for error reporting.
    pub de_lines: Vec<usize>,
    pub j_line: usize,
    pub metric_lines: Vec<usize>,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    // column of chars[0] in the source line
    offset: usize,
}

impl Cursor {
    fn new(src: &str, line: usize, offset: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
            offset,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.line,
            column: self.offset + self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        if self.chars[self.pos..].iter().take(n).copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.chars.get(self.pos) {
            Some(c) if c.is_alphabetic() || *c == '_' => self.pos += 1,
            _ => return self.err("expected a name"),
        }
        while let Some(c) = self.chars.get(self.pos) {
            if c.is_alphanumeric() || *c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn natural(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    /// `p` or `p/q`.
    fn rational(&mut self) -> Result<Option<Rational>, ParseError> {
        let Some(p) = self.natural() else {
            return Ok(None);
        };
        if self.eat('/') {
            let at = self.pos;
            match self.natural() {
                Some(q) if !q.is_zero() => Ok(Some(Rational::new(p, q))),
                Some(_) => {
                    self.pos = at;
                    self.err("zero denominator")
                }
                None => self.err("expected a denominator"),
            }
        } else {
            Ok(Some(Rational::from_integer(p)))
        }
    }
}

fn is_minus(c: char) -> bool {
    c == '-' || c == '\u{2212}'
}

/// A linear combination of wedge monomials in the declared generators.
fn expression(
    cur: &mut Cursor,
    names: &[String],
    stop: &[char],
) -> Result<Form<Rational>, ParseError> {
    let ngens = names.len();
    let mut out = Form::<Rational>::zero(ngens);
    let mut first = true;
    loop {
        let Some(c) = cur.peek() else {
            if first {
                return cur.err("expected a term");
            }
            break;
        };
        if stop.contains(&c) && !first {
            break;
        }
        let mut sign = Rational::one();
        if !first {
            if c == '+' {
                cur.pos += 1;
            } else if is_minus(c) {
                cur.pos += 1;
                sign = -sign;
            } else {
                return cur.err("expected '+' or '-'");
            }
        } else if c == '+' {
            cur.pos += 1;
        } else if is_minus(c) {
            cur.pos += 1;
            sign = -sign;
        }
        first = false;
        let coeff = cur.rational()?;
        let has_coeff = coeff.is_some();
        let coeff = coeff.unwrap_or_else(Rational::one) * sign;
        cur.eat('*');
        // A bare coefficient is a constant; only "0" is meaningful there.
        match cur.peek() {
            Some(c) if c.is_alphabetic() || c == '_' => {}
            _ if has_coeff => {
                if !coeff.is_zero() {
                    return cur.err("expected a wedge monomial after the coefficient");
                }
                continue;
            }
            _ => return cur.err("expected a term"),
        }
        let mut mask = 0u32;
        let mut sign = 1i32;
        loop {
            cur.skip_ws();
            let col = cur.pos;
            let name = cur.ident()?;
            let Some(k) = names.iter().position(|n| *n == name) else {
                cur.pos = col;
                return cur.err(format!("unknown generator '{name}'"));
            };
            if mask & (1 << k) != 0 {
                cur.pos = col;
                return cur.err(format!("generator '{name}' repeated in a monomial"));
            }
            // sign of moving e^k past the higher generators already present
            if (mask >> k).count_ones() % 2 == 1 {
                sign = -sign;
            }
            mask |= 1 << k;
            if !(cur.eat('^') || cur.eat('\u{2227}')) {
                break;
            }
        }
        let c = if sign < 0 { -coeff } else { coeff };
        let cur_c = out.coeff(mask).clone();
        out.set_coeff(mask, cur_c + c);
    }
    Ok(out)
}

fn require_degree(
    f: &Form<Rational>,
    k: usize,
    line: usize,
    offset: usize,
    what: &str,
) -> Result<(), ParseError> {
    if f.is_zero() || f.degree() == Some(k) {
        Ok(())
    } else {
        Err(ParseError {
            line,
            column: offset + 1,
            message: format!("{what} must be a {k}-form"),
        })
    }
}

/// Parses a presentation file.
pub fn parse(src: &str) -> Result<Presentation, ParseError> {
    let mut name: Option<String> = None;
    let mut dim: Option<(usize, usize)> = None;
    let mut names: Option<Vec<String>> = None;
    let mut basis_line = 0;
    let mut de: Vec<Option<Form<Rational>>> = Vec::new();
    let mut j_cols: Vec<Option<Vec<Rational>>> = Vec::new();
    let mut j_seen = false;
    let mut j_line = 0;
    let mut de_lines: Vec<usize> = Vec::new();
    let mut metrics: Vec<(String, Form<Rational>)> = Vec::new();
    let mut metric_lines = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor::new(content, line, 0);
        let kw_col = {
            cur.skip_ws();
            cur.pos
        };
        let keyword = if cur.eat_str("J:") {
            "J".to_string()
        } else {
            cur.ident()?
        };
        let need_basis = |cur: &Cursor| -> Result<(), ParseError> {
            if names.is_none() {
                cur.err(format!("'{keyword}' before 'basis'"))
            } else {
                Ok(())
            }
        };
        match keyword.as_str() {
            "algebra" => {
                if name.is_some() {
                    cur.pos = kw_col;
                    return cur.err("duplicate 'algebra'");
                }
                cur.skip_ws();
                let rest: String = cur.chars[cur.pos..].iter().collect();
                let rest = rest.trim();
                if rest.is_empty() {
                    return cur.err("expected an algebra name");
                }
                name = Some(rest.to_string());
            }
            "dim" => {
                let at = {
                    cur.skip_ws();
                    cur.pos
                };
                let Some(v) = cur.natural() else {
                    return cur.err("expected a dimension");
                };
                let v: usize = match usize::try_from(&v) {
                    Ok(v) => v,
                    Err(_) => {
                        cur.pos = at;
                        return cur.err("dimension too large");
                    }
                };
                if !cur.at_end() {
                    return cur.err("unexpected text after the dimension");
                }
                if dim.is_some() {
                    cur.pos = kw_col;
                    return cur.err("duplicate 'dim'");
                }
                if let Some(ns) = &names {
                    if ns.len() != v {
                        cur.pos = at;
                        return cur.err(format!("'dim {v}' but {} generators listed", ns.len()));
                    }
                }
                dim = Some((v, at));
            }
            "basis" => {
                if names.is_some() {
                    cur.pos = kw_col;
                    return cur.err("duplicate 'basis'");
                }
                let mut ns: Vec<String> = Vec::new();
                while !cur.at_end() {
                    let col = cur.pos;
                    let n = cur.ident()?;
                    if ns.contains(&n) || n == "d" || n == "J" {
                        cur.pos = col;
                        cur.skip_ws();
                        return cur.err(format!("invalid or repeated generator name '{n}'"));
                    }
                    ns.push(n);
                    cur.eat(',');
                }
                if ns.is_empty() {
                    return cur.err("expected generator names");
                }
                if ns.len() > lgcone_core::exterior::basis::MAX_GENERATORS {
                    return cur.err(format!(
                        "at most {} generators are supported",
                        lgcone_core::exterior::basis::MAX_GENERATORS
                    ));
                }
                if let Some((d, col)) = dim {
                    if d != ns.len() {
                        return Err(ParseError {
                            line,
                            column: col + 1,
                            message: format!("'dim {d}' but {} generators listed", ns.len()),
                        });
                    }
                }
                de = vec![None; ns.len()];
                de_lines = vec![0; ns.len()];
                j_cols = vec![None; ns.len()];
                names = Some(ns);
                basis_line = line;
            }
            "d" => {
                need_basis(&cur)?;
                let ns = names.as_ref().unwrap();
                cur.skip_ws();
                let col = cur.pos;
                let g = cur.ident()?;
                let Some(k) = ns.iter().position(|n| *n == g) else {
                    cur.pos = col;
                    return cur.err(format!("unknown generator '{g}'"));
                };
                if de[k].is_some() {
                    cur.pos = col;
                    return cur.err(format!("second equation for d {g}"));
                }
                if !cur.eat('=') {
                    return cur.err("expected '='");
                }
                cur.skip_ws();
                let start = cur.pos;
                let f = expression(&mut cur, ns, &[])?;
                require_degree(&f, 2, line, start, &format!("d {g}"))?;
                de[k] = Some(f);
                de_lines[k] = line;
            }
            "J" => {
                need_basis(&cur)?;
                if !j_seen {
                    j_line = line;
                }
                j_seen = true;
                let ns = names.as_ref().unwrap();
                loop {
                    cur.skip_ws();
                    let col = cur.pos;
                    let g = cur.ident()?;
                    let Some(k) = ns.iter().position(|n| *n == g) else {
                        cur.pos = col;
                        return cur.err(format!("unknown generator '{g}'"));
                    };
                    if !cur.eat_str("->") && !cur.eat('\u{2192}') {
                        return cur.err("expected '->'");
                    }
                    cur.skip_ws();
                    let start = cur.pos;
                    let f = expression(&mut cur, ns, &[','])?;
                    require_degree(&f, 1, line, start, &format!("J {g}"))?;
                    if j_cols[k].is_some() {
                        cur.pos = col;
                        return cur.err(format!("J {g} given twice"));
                    }
                    j_cols[k] = Some(f.vector(1));
                    if !cur.eat(',') {
                        break;
                    }
                }
                if !cur.at_end() {
                    return cur.err("expected ',' or end of line");
                }
            }
            "metric" => {
                need_basis(&cur)?;
                let ns = names.as_ref().unwrap();
                let label = cur.ident()?;
                if metrics.iter().any(|(l, _)| *l == label) {
                    return cur.err(format!("duplicate metric '{label}'"));
                }
                if !cur.eat('=') {
                    return cur.err("expected '='");
                }
                cur.skip_ws();
                let start = cur.pos;
                let f = expression(&mut cur, ns, &[])?;
                require_degree(&f, 2, line, start, &format!("metric {label}"))?;
                metrics.push((label, f));
                metric_lines.push(line);
            }
            other => {
                cur.pos = kw_col;
                return cur.err(format!("unknown section '{other}'"));
            }
        }
    }

    let at_end = |message: String| ParseError {
        line: last_line + 1,
        column: 1,
        message,
    };
    let name = name.ok_or_else(|| at_end("missing 'algebra' line".into()))?;
    let names = names.ok_or_else(|| at_end("missing 'basis' line".into()))?;
    let ngens = names.len();
    let de: Vec<Form<Rational>> = de
        .into_iter()
        .enumerate()
        .map(|(k, f)| f.ok_or_else(|| at_end(format!("missing equation 'd {} = ...'", names[k]))))
        .collect::<Result<_, _>>()?;
    if !j_seen {
        return Err(at_end("missing 'J:' section".into()));
    }
    // A single-term image J a = c b determines J b = -a / c.
    let given = j_cols.clone();
    for (k, col) in given.iter().enumerate() {
        let Some(col) = col else { continue };
        let nz: Vec<usize> = (0..ngens).filter(|&i| !col[i].is_zero()).collect();
        if let [b] = nz[..] {
            if given[b].is_none() && j_cols[b].is_none() {
                let mut v = vec![Rational::zero(); ngens];
                v[k] = -(Rational::one() / col[b].clone());
                j_cols[b] = Some(v);
            }
        }
    }
    let mut j = Matrix::zeros(ngens, ngens);
    for (k, col) in j_cols.into_iter().enumerate() {
        let col = col.ok_or_else(|| ParseError {
            line: basis_line,
            column: 1,
            message: format!("J {} is not determined", names[k]),
        })?;
        for (i, x) in col.into_iter().enumerate() {
            j[(i, k)] = x;
        }
    }
    Ok(Presentation {
        name,
        names,
        de,
        j,
        metrics,
        de_lines,
        j_line,
        metric_lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use lgcone_core::exactla::{q, qi};

    const INOUE: &str = "\
algebra inoue
dim 4
basis a b g1 g2
d a = 0
d b = -a^b
d g1 = 1/2 a^g1 + 3/7 a^g2
d g2 = -3/7 a^g1 + 1/2 a^g2
J: a -> b, g1 -> g2
";

    #[test]
    fn reads_inoue() {
        let p = parse(INOUE).unwrap();
        assert_eq!(p.names, vec!["a", "b", "g1", "g2"]);
        assert_eq!(*p.de[1].coeff(0b0011), qi(-1));
        assert_eq!(*p.de[2].coeff(0b0101), q(1, 2));
        // J a = b implies J b = -a
        assert_eq!(p.j[(1, 0)], qi(1));
        assert_eq!(p.j[(0, 1)], qi(-1));
    }

    #[test]
    fn wedge_order_sets_sign() {
        let src = "algebra x\nbasis e1 e2 e3\nd e1 = 0\nd e2 = 0\nd e3 = e2^e1\nJ: e1 -> e1\n";
        // Degenerate J is fine for the parser.
        let p = parse(src);
        assert!(p.is_err()); // e2, e3 undetermined
        let src = "algebra x\nbasis e1 e2\nd e1 = 0\nd e2 = 0\nmetric m = e2^e1\nJ: e1 -> e2\n";
        let p = parse(src).unwrap();
        assert_eq!(*p.metrics[0].1.coeff(0b11), qi(-1));
    }

    #[test]
    fn missing_j_is_reported() {
        let src = "algebra x\nbasis a b\nd a = 0\nd b = a^b\n";
        let e = parse(src).unwrap_err();
        assert_eq!(e.line, 5);
        assert!(e.message.contains("J"));
    }

    #[test]
    fn error_positions() {
        let e = parse("algebra x\nbasis a b\nd a = 0\nd b = a^c\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 9));
        let e = parse("algebra x\nbasis a b\nd a = 0\nd b = 1/0 a^b\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 9));
        let e = parse("algebra x\nbasis a b\nd a = 0\nd b = a\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("2-form"));
        let e = parse("algebra x\nfoo\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
    }

    #[test]
    fn unicode_minus_and_comments() {
        let src = "algebra x # name\nbasis a b\nd a = 0 # closed\nd b = \u{2212}a^b\nJ: a -> b\n";
        let p = parse(src).unwrap();
        assert_eq!(*p.de[1].coeff(0b11), qi(-1));
        assert_eq!(p.name, "x");
    }

    #[test]
    fn dim_must_match_basis() {
        let e = parse("algebra x\nbasis a b\ndim 4\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 5));
        let e = parse("algebra x\ndim 3\nbasis a b\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse("algebra x\ndim 2\ndim 2\n").unwrap_err();
        assert!(e.message.contains("duplicate"));
    }
}
