//! Symbolic cost expressions: tree, canonical rendering, parser, evaluator.
//!
//! Canonical text uses `+` for sums, `·` for products, `a/b` for exact
//! quotients and `⌈a/b⌉` for ceiling division. A constant written directly in
//! front of a symbol (`2b`, `6b_640`) is a juxtaposed product and renders back
//! the same way, so table rows survive a render/parse round trip unchanged.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

pub type Rational = num_rational::BigRational;

pub type Bindings = BTreeMap<String, Rational>;

/// Every symbol an expression may mention.
pub const SYMBOLS: &[&str] = &[
    // cost parameters
    "b", "P", "b_640", "b_1024", "c_k", "c_n", "c_A", "c_M", "c_f",
    // rates and sizes
    "r", "r_in", "r_out", "n", "d",
    // input lengths and block counts
    "len_A", "len_M", "|A|", "|M|", "|AD|", "|P|", "a", "m", "l_A", "l_P", "ℓ_A", "ℓ_M",
];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CostExpr {
    Const(u64),
    Param(String),
    Sum(Vec<CostExpr>),
    /// `juxtaposed` products are a constant immediately followed by a symbol.
    Product { factors: Vec<CostExpr>, juxtaposed: bool },
    /// Exact division, for rows written without ceilings.
    Quotient(Box<CostExpr>, Box<CostExpr>),
    CeilDiv(Box<CostExpr>, Box<CostExpr>),
}

pub fn c(v: u64) -> CostExpr {
    CostExpr::Const(v)
}

pub fn p(name: &str) -> CostExpr {
    debug_assert!(SYMBOLS.contains(&name), "unknown symbol {name}");
    CostExpr::Param(name.to_string())
}

pub fn sum(children: Vec<CostExpr>) -> CostExpr {
    if children.len() == 1 {
        return children.into_iter().next().unwrap();
    }
    CostExpr::Sum(children)
}

pub fn prod(factors: Vec<CostExpr>) -> CostExpr {
    if factors.len() == 1 {
        return factors.into_iter().next().unwrap();
    }
    CostExpr::Product { factors, juxtaposed: false }
}

/// `2b`, `6b_640`.
pub fn juxt(k: u64, name: &str) -> CostExpr {
    CostExpr::Product { factors: vec![c(k), p(name)], juxtaposed: true }
}

pub fn quot(num: CostExpr, den: CostExpr) -> CostExpr {
    CostExpr::Quotient(Box::new(num), Box::new(den))
}

pub fn ceil(num: CostExpr, den: CostExpr) -> CostExpr {
    CostExpr::CeilDiv(Box::new(num), Box::new(den))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unbound symbol `{0}`")]
    Unbound(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expression parse error at character {offset}: {msg}")]
pub struct ParseError {
    pub offset: usize,
    pub msg: String,
}

impl CostExpr {
    /// Symbols in order of first appearance.
    pub fn symbols(&self) -> Vec<&str> {
        fn walk<'a>(e: &'a CostExpr, out: &mut Vec<&'a str>) {
            match e {
                CostExpr::Const(_) => {}
                CostExpr::Param(s) => {
                    if !out.contains(&s.as_str()) {
                        out.push(s);
                    }
                }
                CostExpr::Sum(cs) | CostExpr::Product { factors: cs, .. } => {
                    cs.iter().for_each(|c| walk(c, out))
                }
                CostExpr::Quotient(a, b) | CostExpr::CeilDiv(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    pub fn eval(&self, bindings: &Bindings) -> Result<Rational, EvalError> {
        Ok(match self {
            CostExpr::Const(v) => Rational::from_integer(BigInt::from(*v)),
            CostExpr::Param(s) => bindings.get(s).cloned().ok_or_else(|| EvalError::Unbound(s.clone()))?,
            CostExpr::Sum(cs) => {
                let mut acc = Rational::zero();
                for c in cs {
                    acc += c.eval(bindings)?;
                }
                acc
            }
            CostExpr::Product { factors, .. } => {
                let mut acc = Rational::from_integer(1.into());
                for f in factors {
                    acc *= f.eval(bindings)?;
                }
                acc
            }
            CostExpr::Quotient(a, b) | CostExpr::CeilDiv(a, b) => {
                let den = b.eval(bindings)?;
                if den.is_zero() {
                    return Err(EvalError::ZeroDenominator(self.render()));
                }
                let q = a.eval(bindings)? / den;
                if matches!(self, CostExpr::CeilDiv(..)) {
                    q.ceil()
                } else {
                    q
                }
            }
        })
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        self.render_into(&mut s);
        s
    }

    fn is_atom(&self) -> bool {
        matches!(
            self,
            CostExpr::Const(_) | CostExpr::Param(_) | CostExpr::CeilDiv(..) | CostExpr::Product { juxtaposed: true, .. }
        )
    }

    fn render_atom(&self, s: &mut String) {
        if self.is_atom() {
            self.render_into(s);
        } else {
            s.push('(');
            self.render_into(s);
            s.push(')');
        }
    }

    fn render_into(&self, s: &mut String) {
        match self {
            CostExpr::Const(v) => s.push_str(&v.to_string()),
            CostExpr::Param(name) => s.push_str(name),
            CostExpr::Sum(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        s.push_str(" + ");
                    }
                    if matches!(c, CostExpr::Sum(_)) {
                        c.render_atom(s);
                    } else {
                        c.render_into(s);
                    }
                }
            }
            CostExpr::Product { factors, juxtaposed: true } => factors.iter().for_each(|f| f.render_atom(s)),
            CostExpr::Product { factors, juxtaposed: false } => {
                for (i, f) in factors.iter().enumerate() {
                    if i > 0 {
                        s.push('·');
                    }
                    if matches!(f, CostExpr::Quotient(..)) {
                        f.render_into(s);
                    } else {
                        f.render_atom(s);
                    }
                }
            }
            CostExpr::Quotient(a, b) => {
                a.render_atom(s);
                s.push('/');
                b.render_atom(s);
            }
            CostExpr::CeilDiv(a, b) => {
                s.push('⌈');
                a.render_atom(s);
                s.push('/');
                b.render_atom(s);
                s.push('⌉');
            }
        }
    }

    pub fn parse(text: &str) -> Result<CostExpr, ParseError> {
        let toks = lex(text)?;
        let mut p = Parser { toks, pos: 0, depth: 0, end: text.chars().count() };
        let e = p.sum()?;
        if let Some(t) = p.toks.get(p.pos) {
            return Err(ParseError { offset: t.offset, msg: format!("unexpected {}", t.kind) });
        }
        Ok(e)
    }
}

impl fmt::Display for CostExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Num(u64),
    Sym(String),
    Plus,
    Times,
    Slash,
    LParen,
    RParen,
    LCeil,
    RCeil,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Num(v) => write!(f, "number {v}"),
            Kind::Sym(s) => write!(f, "symbol `{s}`"),
            Kind::Plus => f.write_str("`+`"),
            Kind::Times => f.write_str("`·`"),
            Kind::Slash => f.write_str("`/`"),
            Kind::LParen => f.write_str("`(`"),
            Kind::RParen => f.write_str("`)`"),
            Kind::LCeil => f.write_str("`⌈`"),
            Kind::RCeil => f.write_str("`⌉`"),
        }
    }
}

struct Tok {
    kind: Kind,
    offset: usize,
    /// No whitespace between this token and the previous one.
    glued: bool,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == 'ℓ'
}

fn lex(text: &str) -> Result<Vec<Tok>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let mut glued = false;
    while i < chars.len() {
        let ch = chars[i];
        let start = i;
        let err = |msg: String| ParseError { offset: start, msg };
        if ch.is_whitespace() {
            glued = false;
            i += 1;
            continue;
        }
        let kind = match ch {
            '+' => Kind::Plus,
            '·' | '*' => Kind::Times,
            '/' => Kind::Slash,
            '(' => Kind::LParen,
            ')' => Kind::RParen,
            '⌈' => Kind::LCeil,
            '⌉' => Kind::RCeil,
            '0'..='9' => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                Kind::Num(digits.parse().map_err(|_| err(format!("number {digits} out of range")))?)
            }
            '|' => {
                let close = chars[i + 1..]
                    .iter()
                    .position(|&c| c == '|')
                    .ok_or_else(|| err("unterminated `|`".into()))?;
                i += close + 1;
                Kind::Sym(chars[start..=i].iter().collect())
            }
            c if is_ident_start(c) => {
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                Kind::Sym(chars[start..=i].iter().collect())
            }
            c => return Err(err(format!("unexpected character {c:?}"))),
        };
        if let Kind::Sym(s) = &kind {
            if !SYMBOLS.contains(&s.as_str()) {
                return Err(err(format!("unknown symbol `{s}`; known: {}", SYMBOLS.join(", "))));
            }
        }
        out.push(Tok { kind, offset: start, glued });
        glued = true;
        i += 1;
    }
    Ok(out)
}

const MAX_DEPTH: usize = 64;

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    depth: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Kind> {
        self.toks.get(self.pos).map(|t| &t.kind)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.offset)
    }

    fn expect(&mut self, k: Kind) -> Result<(), ParseError> {
        if self.peek() == Some(&k) {
            self.pos += 1;
            Ok(())
        } else {
            let got = self.peek().map_or("end of input".to_string(), |g| g.to_string());
            Err(ParseError { offset: self.offset(), msg: format!("expected {k}, got {got}") })
        }
    }

    fn sum(&mut self) -> Result<CostExpr, ParseError> {
        let mut terms = vec![self.product()?];
        while self.peek() == Some(&Kind::Plus) {
            self.pos += 1;
            terms.push(self.product()?);
        }
        Ok(sum(terms))
    }

    fn product(&mut self) -> Result<CostExpr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Kind::Times) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(prod(factors))
    }

    fn factor(&mut self) -> Result<CostExpr, ParseError> {
        let a = self.atom()?;
        if self.peek() == Some(&Kind::Slash) {
            self.pos += 1;
            let b = self.atom()?;
            return Ok(quot(a, b));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<CostExpr, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError { offset: self.offset(), msg: "expression nested too deeply".into() });
        }
        let e = self.atom_inner();
        self.depth -= 1;
        e
    }

    fn atom_inner(&mut self) -> Result<CostExpr, ParseError> {
        let offset = self.offset();
        let Some(kind) = self.peek().cloned() else {
            return Err(ParseError { offset, msg: "unexpected end of input".into() });
        };
        self.pos += 1;
        match kind {
            Kind::Num(v) => match self.toks.get(self.pos) {
                Some(Tok { kind: Kind::Sym(s), glued: true, .. }) if !s.starts_with('|') => {
                    let s = s.clone();
                    self.pos += 1;
                    Ok(CostExpr::Product { factors: vec![c(v), CostExpr::Param(s)], juxtaposed: true })
                }
                _ => Ok(c(v)),
            },
            Kind::Sym(s) => Ok(CostExpr::Param(s)),
            Kind::LParen => {
                let e = self.sum()?;
                self.expect(Kind::RParen)?;
                Ok(e)
            }
            Kind::LCeil => {
                let a = self.atom()?;
                self.expect(Kind::Slash)?;
                let b = self.atom()?;
                self.expect(Kind::RCeil)?;
                Ok(ceil(a, b))
            }
            other => Err(ParseError { offset, msg: format!("unexpected {other}") }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn renders_canonical_forms() {
        assert_eq!(sum(vec![p("ℓ_A"), p("ℓ_M")]).render(), "ℓ_A + ℓ_M");
        assert_eq!(prod(vec![c(2), ceil(p("|A|"), p("r")), p("b")]).render(), "2·⌈|A|/r⌉·b");
        assert_eq!(c(0).render(), "0");
        assert_eq!(juxt(6, "b_640").render(), "6b_640");
        assert_eq!(prod(vec![c(2), quot(p("|A|"), p("r")), p("b")]).render(), "2·|A|/r·b");
    }

    #[test]
    fn parses_what_it_renders() {
        for t in ["2b + 2·|A|/r_in·b", "(a + m)·b", "⌈(len_A + 1)/r⌉", "6b_640/(2·b)", "(a + b) + c_f"] {
            assert_eq!(CostExpr::parse(t).unwrap().render(), t);
        }
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(CostExpr::parse("a + ").unwrap_err().offset, 4);
        assert_eq!(CostExpr::parse("a + zz").unwrap_err().offset, 4);
        assert!(CostExpr::parse("⌈a/b").is_err());
        assert!(CostExpr::parse("|A").is_err());
        assert!(CostExpr::parse("99999999999999999999999").is_err());
        assert!(CostExpr::parse(&"(".repeat(500)).is_err());
        assert!(CostExpr::parse("").is_err());
    }

    #[test]
    fn juxtaposition_needs_no_space() {
        assert_eq!(CostExpr::parse("2b").unwrap(), juxt(2, "b"));
        assert!(CostExpr::parse("2 b").is_err());
    }

    #[test]
    fn evaluates_exactly() {
        let mut env = Bindings::new();
        env.insert("|A|".into(), int(33));
        env.insert("r".into(), int(32));
        assert_eq!(ceil(p("|A|"), p("r")).eval(&env).unwrap(), int(2));
        assert_eq!(quot(p("|A|"), p("r")).eval(&env).unwrap(), Rational::new(33.into(), 32.into()));
        assert_eq!(c(5).eval(&Bindings::new()).unwrap(), int(5));
        assert_eq!(p("b").eval(&env), Err(EvalError::Unbound("b".into())));
        env.insert("d".into(), int(0));
        assert!(matches!(ceil(p("r"), p("d")).eval(&env), Err(EvalError::ZeroDenominator(_))));
    }
}
