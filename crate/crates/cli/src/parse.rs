//! Recursive-descent parsers for functional and manifold expressions.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := [rational '*'] atom ('*' atom)* | rational
//! atom     := 'sign' | 'ahat' | 'ahat_t' | 'ell[' int ']' | 'p' int ['^' int]
//!
//! manifold := 'point' | 'cp:' int | 'hp:' int | 'pb:' int ':[' int (',' int)* ']'
//!           | 'prod(' manifold ',' manifold ')'
//!           | ('X12' | 'Y16' | 'Z20') ':c=' int | 'X12xHP:' int ':c=' int
//! ```

use std::fmt;

use charclass::algebra::{int, ExactRational, Partition};
use charclass::cobordism::{genus_as_functional_in, Basis, Functional, NamedGenus};
use charclass::manifolds::{build_cp, build_hp, build_point, build_proj_bundle, product, x12, y16, z20, LineBundleSum};
use charclass::ManifoldModel;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Genus(NamedGenus),
    /// `p_i^e`
    Pontryagin(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coefficient: ExactRational,
    pub atoms: Vec<Atom>,
    pub position: usize,
}

/// A parsed linear combination, not yet resolved against a dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalExpr {
    pub terms: Vec<Term>,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { src: text.as_bytes(), pos: 0 }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn unsigned<T: std::str::FromStr>(&mut self) -> PResult<T> {
        let start = self.pos;
        let d = self.digits().ok_or_else(|| self.error("expected an integer"))?;
        d.parse().map_err(|_| ParseError { position: start, message: format!("integer `{d}` out of range") })
    }

    fn signed(&mut self) -> PResult<i64> {
        let neg = self.eat(b'-');
        let v: i64 = self.unsigned()?;
        Ok(if neg { -v } else { v })
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")
    }
}

pub fn parse_functional_expr(text: &str) -> PResult<FunctionalExpr> {
    let mut lx = Lexer::new(text);
    let mut terms = Vec::new();
    let mut negate = if lx.eat(b'-') {
        true
    } else {
        lx.eat(b'+');
        false
    };
    loop {
        let mut term = parse_term(&mut lx)?;
        if negate {
            term.coefficient = -term.coefficient;
        }
        terms.push(term);
        if lx.at_end() {
            break;
        }
        negate = match lx.peek() {
            Some(b'+') => false,
            Some(b'-') => true,
            _ => return Err(lx.error("expected `+`, `-` or end of input")),
        };
        lx.pos += 1;
    }
    Ok(FunctionalExpr { terms })
}

fn parse_term(lx: &mut Lexer) -> PResult<Term> {
    lx.skip_ws();
    let position = lx.pos;
    let mut coefficient = int(1);
    let mut atoms = Vec::new();
    if lx.peek().is_some_and(|c| c.is_ascii_digit()) {
        let n: i64 = lx.unsigned()?;
        coefficient = int(n);
        if lx.eat(b'/') {
            let at = lx.pos;
            let d: i64 = lx.unsigned()?;
            if d == 0 {
                return Err(ParseError { position: at, message: "zero denominator".into() });
            }
            coefficient = ExactRational::new(n.into(), d.into());
        }
        if !lx.eat(b'*') {
            return Ok(Term { coefficient, atoms, position });
        }
    }
    atoms.push(parse_atom(lx)?);
    while lx.eat(b'*') {
        atoms.push(parse_atom(lx)?);
    }
    Ok(Term { coefficient, atoms, position })
}

fn parse_atom(lx: &mut Lexer) -> PResult<Atom> {
    lx.skip_ws();
    let start = lx.pos;
    if lx.eat_str("ell[") {
        let j: usize = lx.unsigned()?;
        lx.expect(b']')?;
        return Ok(Atom::Genus(NamedGenus::Elliptic(j)));
    }
    let word = lx.word();
    let unknown = || ParseError { position: start, message: format!("unknown atom `{word}`") };
    match word {
        "sign" => Ok(Atom::Genus(NamedGenus::Signature)),
        "ahat" => Ok(Atom::Genus(NamedGenus::AHat)),
        "ahat_t" => Ok(Atom::Genus(NamedGenus::AHatTangent)),
        "" => Err(lx.error("expected an atom")),
        w => {
            let i: u32 = w.strip_prefix('p').and_then(|n| n.parse().ok()).filter(|&i| i > 0).ok_or_else(unknown)?;
            let e = if lx.eat(b'^') { lx.unsigned()? } else { 1 };
            if e == 0 {
                return Err(ParseError { position: start, message: "exponent must be positive".into() });
            }
            Ok(Atom::Pontryagin(i, e))
        }
    }
}

impl FunctionalExpr {
    /// Resolves named genera in `basis` and checks weights.
    pub fn resolve(&self, basis: &Basis) -> Result<Functional, ResolveError> {
        let dim = basis.dimension();
        let mut acc = Functional::zero(dim).map_err(ResolveError::Library)?;
        for term in &self.terms {
            let piece = match term.atoms.as_slice() {
                [] if term.coefficient == int(0) => continue,
                [] => return Err(ResolveError::at(term.position, "a nonzero constant is not a functional")),
                [Atom::Genus(g)] => genus_as_functional_in(basis, *g).map_err(ResolveError::Library)?,
                atoms => {
                    let mut parts = Vec::new();
                    for a in atoms {
                        match a {
                            Atom::Pontryagin(i, e) => parts.extend(std::iter::repeat_n(*i, *e as usize)),
                            Atom::Genus(g) => {
                                return Err(ResolveError::at(term.position, format!("`{g}` cannot be multiplied")))
                            }
                        }
                    }
                    let p = Partition::new(parts).expect("positive parts");
                    if p.weight() * 4 != dim {
                        return Err(ResolveError::at(
                            term.position,
                            format!("{p} has weight {}, dim {dim} needs {}", p.weight(), dim / 4),
                        ));
                    }
                    Functional::pontryagin(dim, &p).map_err(ResolveError::Library)?
                }
            };
            acc = acc.try_add(&piece.scale(&term.coefficient)).map_err(ResolveError::Library)?;
        }
        Ok(acc)
    }
}

#[derive(Debug)]
pub enum ResolveError {
    Parse(ParseError),
    Library(charclass::Error),
}

impl ResolveError {
    fn at(position: usize, message: impl Into<String>) -> Self {
        ResolveError::Parse(ParseError { position, message: message.into() })
    }
}

impl fmt::Display for ResolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResolveError::Parse(e) => e.fmt(f),
            ResolveError::Library(e) => e.fmt(f),
        }
    }
}

/// Parses and resolves in one step.
pub fn parse_functional(text: &str, basis: &Basis) -> Result<Functional, ResolveError> {
    parse_functional_expr(text).map_err(ResolveError::Parse)?.resolve(basis)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ManifoldExpr {
    Point,
    Cp(u32),
    Hp(u32),
    Bundle(u32, Vec<i64>),
    Product(Box<ManifoldExpr>, Box<ManifoldExpr>),
    X12(i64),
    Y16(i64),
    Z20(i64),
    X12xHp(u32, i64),
}

pub fn parse_manifold(text: &str) -> PResult<ManifoldExpr> {
    let mut lx = Lexer::new(text);
    let e = parse_manifold_inner(&mut lx)?;
    if !lx.at_end() {
        return Err(lx.error("unexpected trailing input"));
    }
    Ok(e)
}

fn parse_manifold_inner(lx: &mut Lexer) -> PResult<ManifoldExpr> {
    lx.skip_ws();
    let start = lx.pos;
    let word = lx.word();
    let param = |lx: &mut Lexer| -> PResult<i64> {
        lx.expect(b':')?;
        if !lx.eat_str("c=") {
            return Err(lx.error("expected `c=`"));
        }
        lx.signed()
    };
    match word {
        "point" => Ok(ManifoldExpr::Point),
        "cp" => {
            lx.expect(b':')?;
            Ok(ManifoldExpr::Cp(lx.unsigned()?))
        }
        "hp" => {
            lx.expect(b':')?;
            Ok(ManifoldExpr::Hp(lx.unsigned()?))
        }
        "pb" => {
            lx.expect(b':')?;
            let l = lx.unsigned()?;
            lx.expect(b':')?;
            lx.expect(b'[')?;
            let mut degrees = vec![lx.signed()?];
            while lx.eat(b',') {
                degrees.push(lx.signed()?);
            }
            lx.expect(b']')?;
            Ok(ManifoldExpr::Bundle(l, degrees))
        }
        "prod" => {
            lx.expect(b'(')?;
            let a = parse_manifold_inner(lx)?;
            lx.expect(b',')?;
            let b = parse_manifold_inner(lx)?;
            lx.expect(b')')?;
            Ok(ManifoldExpr::Product(Box::new(a), Box::new(b)))
        }
        "X12" => Ok(ManifoldExpr::X12(param(lx)?)),
        "Y16" => Ok(ManifoldExpr::Y16(param(lx)?)),
        "Z20" => Ok(ManifoldExpr::Z20(param(lx)?)),
        "X12xHP" => {
            lx.expect(b':')?;
            let n = lx.unsigned()?;
            Ok(ManifoldExpr::X12xHp(n, param(lx)?))
        }
        "" => Err(lx.error("expected a manifold")),
        w => Err(ParseError { position: start, message: format!("unknown manifold `{w}`") }),
    }
}

impl ManifoldExpr {
    /// Builds the model; warnings (e.g. a non-spin family member) are pushed
    /// onto `warnings`.
    pub fn build(&self, warnings: &mut Vec<String>) -> charclass::Result<ManifoldModel> {
        let odd = |name: &str, c: i64, warnings: &mut Vec<String>| {
            if c % 2 != 0 {
                warnings.push(format!("{name} with odd c={c} is not spin"));
            }
        };
        match self {
            ManifoldExpr::Point => Ok(build_point()),
            ManifoldExpr::Cp(n) => build_cp(*n),
            ManifoldExpr::Hp(n) => build_hp(*n),
            ManifoldExpr::Bundle(l, d) => build_proj_bundle(&LineBundleSum::new(*l, d.clone())?),
            ManifoldExpr::Product(a, b) => product(&a.build(warnings)?, &b.build(warnings)?),
            ManifoldExpr::X12(c) => {
                odd("X12", *c, warnings);
                Ok(x12(*c))
            }
            ManifoldExpr::Y16(c) => Ok(y16(*c)),
            ManifoldExpr::Z20(c) => {
                odd("Z20", *c, warnings);
                Ok(z20(*c))
            }
            ManifoldExpr::X12xHp(n, c) => {
                odd("X12", *c, warnings);
                product(&x12(*c), &build_hp(*n)?)
            }
        }
    }
}

/// `a..b`, inclusive, either end possibly negative.
pub fn parse_range(text: &str) -> PResult<Vec<i64>> {
    let (a, b) = text.split_once("..").ok_or(ParseError { position: 0, message: "expected a range `a..b`".into() })?;
    let bound = |s: &str, position: usize| {
        s.trim().parse::<i64>().map_err(|_| ParseError { position, message: format!("bad range bound `{s}`") })
    };
    let lo = bound(a, 0)?;
    let hi = bound(b, a.len() + 2)?;
    if lo > hi {
        return Err(ParseError { position: 0, message: format!("empty range {lo}..{hi}") });
    }
    Ok((lo..=hi).collect())
}
