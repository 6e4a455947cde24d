//! The session language: a small line-oriented script format for
//! declaring rings, ideals and modules and issuing report/verify
//! commands. Diagnostics carry line and column.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::free::Matrix;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::theorems::THEOREM_IDS;

#[derive(Debug, Clone, PartialEq)]
pub enum OpKind {
    Transpose,
    Syzygy,
    Lambda,
    TFunctor,
    Link,
    Ext,
    Tor,
    Hom,
    Dual,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Arg {
    Name(String),
    Int(i64),
}

#[derive(Debug, Clone)]
pub enum ModuleExpr {
    /// Cokernel of an explicit matrix over the named ring.
    Coker { ring: String, matrix: Matrix },
    /// Quotient of a ring or module by an inline ideal.
    Quotient {
        base: String,
        gens: Vec<Polynomial>,
    },
    Op { op: OpKind, args: Vec<Arg> },
}

#[derive(Debug, Clone, PartialEq)]
pub enum ClaimValue {
    Bool(bool),
    Int(i64),
}

#[derive(Debug, Clone)]
pub enum Stmt {
    Ring { name: String, ring: Ring },
    Ideal {
        name: String,
        gens: Vec<Polynomial>,
    },
    Module { name: String, expr: ModuleExpr },
    Print { module: String },
    Verify {
        theorem: String,
        target: Option<String>,
    },
    SetBound(u32),
    SetDegreeCap(i64),
    /// A falsifiable assertion about a module invariant; checked at run
    /// time and reported alongside theorem verifications.
    Claim {
        prop: String,
        module: String,
        expected: ClaimValue,
    },
}

#[derive(Debug, Clone, Default)]
pub struct Session {
    pub stmts: Vec<Stmt>,
}

// ---------------------------------------------------------------- lexer

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Punct(char),
    Eof,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, Copy)]
struct Loc {
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn err(&self, loc: Loc, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: loc.line,
            col: loc.col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = *self.src.get(self.pos)?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.src.get(self.pos) {
                Some(c) if c.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(c) = self.src.get(self.pos) {
                        if *c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn next_tok(&mut self) -> Result<(Tok, Loc)> {
        self.skip_trivia();
        let loc = Loc {
            line: self.line,
            col: self.col,
        };
        let Some(&c) = self.src.get(self.pos) else {
            return Ok((Tok::Eof, loc));
        };
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = self.pos;
            while self
                .src
                .get(self.pos)
                .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_' || *c == b'-')
            {
                self.bump();
            }
            let s = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .to_string();
            return Ok((Tok::Ident(s), loc));
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.bump();
            }
            let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let n: i64 = s
                .parse()
                .map_err(|_| self.err(loc, format!("integer out of range: {s}")))?;
            return Ok((Tok::Int(n), loc));
        }
        if b";=,/()[]^*+-".contains(&c) {
            self.bump();
            return Ok((Tok::Punct(c as char), loc));
        }
        Err(self.err(loc, format!("unexpected character {:?}", c as char)))
    }
}

// --------------------------------------------------------------- parser

pub struct Parser<'a> {
    lx: Lexer<'a>,
    tok: Tok,
    loc: Loc,
    rings: Vec<(String, Ring)>,
    ideals: Vec<String>,
    modules: Vec<String>,
    depth: usize,
}

/// Parse a polynomial in the given variables. `1 + 2*x*y^3 - z` style:
/// sums of signed terms, `*` products of factors, `^` powers,
/// parenthesized subexpressions.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut p = Parser {
        lx: Lexer::new(text),
        tok: Tok::Eof,
        loc: Loc { line: 1, col: 1 },
        rings: vec![("R".into(), ring.clone())],
        ideals: Vec::new(),
        modules: Vec::new(),
        depth: 0,
    };
    p.advance()?;
    let poly = p.poly(ring)?;
    if p.tok != Tok::Eof {
        return Err(p.err("trailing input after polynomial"));
    }
    Ok(poly)
}

/// Parse a whole session script.
pub fn parse_session(text: &str) -> Result<Session> {
    let mut p = Parser {
        lx: Lexer::new(text),
        tok: Tok::Eof,
        loc: Loc { line: 1, col: 1 },
        rings: Vec::new(),
        ideals: Vec::new(),
        modules: Vec::new(),
        depth: 0,
    };
    p.advance()?;
    let mut stmts = Vec::new();
    while p.tok != Tok::Eof {
        stmts.push(p.stmt()?);
    }
    Ok(Session { stmts })
}

impl<'a> Parser<'a> {
    fn advance(&mut self) -> Result<()> {
        let (tok, loc) = self.lx.next_tok()?;
        self.tok = tok;
        self.loc = loc;
        Ok(())
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.loc.line,
            col: self.loc.col,
            msg: msg.into(),
        }
    }

    fn expect_punct(&mut self, c: char) -> Result<()> {
        if self.tok == Tok::Punct(c) {
            self.advance()
        } else {
            Err(self.err(format!("expected {:?}, found {:?}", c, self.tok)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        if let Tok::Ident(s) = self.tok.clone() {
            self.advance()?;
            Ok(s)
        } else {
            Err(self.err(format!("expected identifier, found {:?}", self.tok)))
        }
    }

    fn int(&mut self) -> Result<i64> {
        let mut neg = false;
        if self.tok == Tok::Punct('-') {
            neg = true;
            self.advance()?;
        }
        if let Tok::Int(n) = self.tok {
            self.advance()?;
            Ok(if neg { -n } else { n })
        } else {
            Err(self.err(format!("expected integer, found {:?}", self.tok)))
        }
    }

    fn current_ring(&self) -> Result<&Ring> {
        self.rings
            .last()
            .map(|(_, r)| r)
            .ok_or_else(|| self.err("no ring declared yet"))
    }

    fn lookup_ring(&self, name: &str) -> Option<&Ring> {
        self.rings.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    fn stmt(&mut self) -> Result<Stmt> {
        let kw_loc = self.loc;
        let kw = self.ident()?;
        let st = match kw.as_str() {
            "ring" => self.ring_stmt()?,
            "ideal" => self.ideal_stmt()?,
            "module" => self.module_stmt()?,
            "print" => self.print_stmt()?,
            "verify" => self.verify_stmt()?,
            "set" => self.set_stmt()?,
            "claim" => self.claim_stmt()?,
            other => {
                return Err(self.lx.err(kw_loc, format!("unknown statement: {other}")))
            }
        };
        self.expect_punct(';')?;
        Ok(st)
    }

    fn ring_stmt(&mut self) -> Result<Stmt> {
        let name = self.ident()?;
        self.expect_punct('=')?;
        let head_loc = self.loc;
        let head = self.ident()?;
        let Some(p) = head
            .strip_prefix('F')
            .and_then(|d| d.parse::<u64>().ok())
        else {
            return Err(self
                .lx
                .err(head_loc, format!("expected a prime field like F101, found {head}")));
        };
        let field = PrimeField::new(p)
            .map_err(|_| self.lx.err(head_loc, format!("{p} is not prime")))?;
        self.expect_punct('[')?;
        let mut vars = vec![self.ident()?];
        while self.tok == Tok::Punct(',') {
            self.advance()?;
            vars.push(self.ident()?);
        }
        self.expect_punct(']')?;
        let base = Ring::polynomial_ring(field, vars)?;
        let ring = if self.tok == Tok::Punct('/') {
            self.advance()?;
            self.expect_punct('(')?;
            let gens = self.poly_list(&base)?;
            self.expect_punct(')')?;
            base.quotient_by(gens)?
        } else {
            base
        };
        if self.rings.iter().any(|(n, _)| *n == name) {
            return Err(self.err(format!("duplicate name: {name}")));
        }
        self.rings.push((name.clone(), ring.clone()));
        Ok(Stmt::Ring { name, ring })
    }

    fn ideal_stmt(&mut self) -> Result<Stmt> {
        let name = self.ident()?;
        self.expect_punct('=')?;
        self.expect_punct('(')?;
        let ring = self.current_ring()?.clone();
        let gens = self.poly_list(&ring)?;
        self.expect_punct(')')?;
        if self.ideals.contains(&name) {
            return Err(self.err(format!("duplicate name: {name}")));
        }
        self.ideals.push(name.clone());
        Ok(Stmt::Ideal { name, gens })
    }

    fn module_stmt(&mut self) -> Result<Stmt> {
        let name = self.ident()?;
        self.expect_punct('=')?;
        let expr = match self.tok.clone() {
            Tok::Ident(id) if id == "coker" => {
                self.advance()?;
                self.coker_expr()?
            }
            Tok::Ident(id) if op_kind(&id).is_some() => {
                self.advance()?;
                self.op_expr(op_kind(&id).unwrap())?
            }
            Tok::Ident(base) => {
                let base_loc = self.loc;
                self.advance()?;
                let known = self.lookup_ring(&base).is_some() || self.modules.contains(&base);
                if !known {
                    return Err(self.lx.err(base_loc, format!("unknown name: {base}")));
                }
                self.expect_punct('/')?;
                self.expect_punct('(')?;
                let ring = match self.lookup_ring(&base) {
                    Some(r) => r.clone(),
                    None => self.current_ring()?.clone(),
                };
                let gens = self.poly_list(&ring)?;
                self.expect_punct(')')?;
                ModuleExpr::Quotient { base, gens }
            }
            other => return Err(self.err(format!("expected a module expression, found {other:?}"))),
        };
        if self.modules.contains(&name) {
            return Err(self.err(format!("duplicate name: {name}")));
        }
        self.modules.push(name.clone());
        Ok(Stmt::Module { name, expr })
    }

    fn coker_expr(&mut self) -> Result<ModuleExpr> {
        let (rname, ring) = self
            .rings
            .last()
            .cloned()
            .ok_or_else(|| self.err("no ring declared yet"))?;
        self.expect_punct('[')?;
        let mut rows = Vec::new();
        loop {
            self.expect_punct('[')?;
            let mut row = vec![self.poly(&ring)?];
            while self.tok == Tok::Punct(',') {
                self.advance()?;
                row.push(self.poly(&ring)?);
            }
            self.expect_punct(']')?;
            rows.push(row);
            if self.tok == Tok::Punct(',') {
                self.advance()?;
            } else {
                break;
            }
        }
        self.expect_punct(']')?;
        let kw_loc = self.loc;
        let kw = self.ident()?;
        if kw != "shifts" {
            return Err(self.lx.err(kw_loc, format!("expected `shifts`, found {kw}")));
        }
        self.expect_punct('(')?;
        let mut shifts = vec![self.int()?];
        while self.tok == Tok::Punct(',') {
            self.advance()?;
            shifts.push(self.int()?);
        }
        self.expect_punct(')')?;
        if shifts.len() != rows.len() {
            return Err(self.err(format!(
                "{} rows but {} shifts",
                rows.len(),
                shifts.len()
            )));
        }
        let ncols = rows[0].len();
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(self.err("ragged matrix rows"));
        }
        let matrix = Matrix::from_rows(&ring, shifts, rows)?;
        Ok(ModuleExpr::Coker { ring: rname, matrix })
    }

    fn op_expr(&mut self, op: OpKind) -> Result<ModuleExpr> {
        self.expect_punct('(')?;
        let mut args = Vec::new();
        if self.tok != Tok::Punct(')') {
            loop {
                match self.tok.clone() {
                    Tok::Ident(s) => {
                        self.advance()?;
                        args.push(Arg::Name(s));
                    }
                    Tok::Int(_) | Tok::Punct('-') => args.push(Arg::Int(self.int()?)),
                    other => {
                        return Err(self.err(format!("expected argument, found {other:?}")))
                    }
                }
                if self.tok == Tok::Punct(',') {
                    self.advance()?;
                } else {
                    break;
                }
            }
        }
        self.expect_punct(')')?;
        self.check_op_args(&op, &args)?;
        Ok(ModuleExpr::Op { op, args })
    }

    fn check_op_args(&self, op: &OpKind, args: &[Arg]) -> Result<()> {
        let module = |a: &Arg| -> Result<()> {
            match a {
                Arg::Name(n) if self.modules.contains(n) => Ok(()),
                Arg::Name(n) => Err(self.err(format!("unknown module: {n}"))),
                Arg::Int(_) => Err(self.err("expected a module name")),
            }
        };
        let ideal = |a: &Arg| -> Result<()> {
            match a {
                Arg::Name(n) if self.ideals.contains(n) => Ok(()),
                Arg::Name(n) => Err(self.err(format!("unknown ideal: {n}"))),
                Arg::Int(_) => Err(self.err("expected an ideal name")),
            }
        };
        let index = |a: &Arg| -> Result<()> {
            match a {
                Arg::Int(n) if *n >= 0 => Ok(()),
                _ => Err(self.err("expected a nonnegative integer")),
            }
        };
        let arity = |want: usize| -> Result<()> {
            if args.len() == want {
                Ok(())
            } else {
                Err(self.err(format!(
                    "{op:?} takes {want} argument(s), got {}",
                    args.len()
                )))
            }
        };
        match op {
            OpKind::Transpose | OpKind::Lambda | OpKind::Dual => {
                arity(1)?;
                module(&args[0])
            }
            OpKind::Syzygy | OpKind::TFunctor => {
                arity(2)?;
                module(&args[0])?;
                index(&args[1])
            }
            OpKind::Link => {
                arity(2)?;
                module(&args[0])?;
                ideal(&args[1])
            }
            OpKind::Hom => {
                arity(2)?;
                module(&args[0])?;
                module(&args[1])
            }
            OpKind::Ext | OpKind::Tor => {
                arity(3)?;
                module(&args[0])?;
                module(&args[1])?;
                index(&args[2])
            }
        }
    }

    fn print_stmt(&mut self) -> Result<Stmt> {
        let kw_loc = self.loc;
        let kw = self.ident()?;
        if kw != "report" {
            return Err(self.lx.err(kw_loc, format!("expected `report`, found {kw}")));
        }
        self.expect_punct('(')?;
        let mod_loc = self.loc;
        let module = self.ident()?;
        if !self.modules.contains(&module) {
            return Err(self.lx.err(mod_loc, format!("unknown module: {module}")));
        }
        self.expect_punct(')')?;
        Ok(Stmt::Print { module })
    }

    fn verify_stmt(&mut self) -> Result<Stmt> {
        self.expect_punct('(')?;
        let thm_loc = self.loc;
        let theorem = self.ident()?;
        if !THEOREM_IDS.contains(&theorem.as_str()) {
            return Err(self
                .lx
                .err(thm_loc, format!("unknown theorem id: {theorem}")));
        }
        self.expect_punct(',')?;
        let tgt_loc = self.loc;
        let tgt = self.ident()?;
        let target = if tgt == "all" {
            None
        } else if self.modules.contains(&tgt) {
            Some(tgt)
        } else {
            return Err(self.lx.err(tgt_loc, format!("unknown module: {tgt}")));
        };
        self.expect_punct(')')?;
        Ok(Stmt::Verify { theorem, target })
    }

    fn set_stmt(&mut self) -> Result<Stmt> {
        let key_loc = self.loc;
        let key = self.ident()?;
        self.expect_punct('=')?;
        let n = self.int()?;
        match key.as_str() {
            "bound" if n >= 1 => Ok(Stmt::SetBound(n as u32)),
            "bound" => Err(self.err("bound must be at least 1")),
            "degree_cap" => Ok(Stmt::SetDegreeCap(n)),
            other => Err(self.lx.err(key_loc, format!("unknown setting: {other}"))),
        }
    }

    fn claim_stmt(&mut self) -> Result<Stmt> {
        let prop_loc = self.loc;
        let prop = self.ident()?;
        const PROPS: &[&str] = &[
            "horizontally_linked",
            "stable",
            "reduced_g_perfect",
            "depth",
            "dim",
            "grade",
            "gdim",
        ];
        if !PROPS.contains(&prop.as_str()) {
            return Err(self.lx.err(prop_loc, format!("unknown claim: {prop}")));
        }
        self.expect_punct('(')?;
        let mod_loc = self.loc;
        let module = self.ident()?;
        if !self.modules.contains(&module) {
            return Err(self.lx.err(mod_loc, format!("unknown module: {module}")));
        }
        self.expect_punct(')')?;
        self.expect_punct('=')?;
        let expected = match self.tok.clone() {
            Tok::Ident(b) if b == "true" || b == "false" => {
                self.advance()?;
                ClaimValue::Bool(b == "true")
            }
            _ => ClaimValue::Int(self.int()?),
        };
        Ok(Stmt::Claim {
            prop,
            module,
            expected,
        })
    }

    fn poly_list(&mut self, ring: &Ring) -> Result<Vec<Polynomial>> {
        let mut out = vec![self.poly(ring)?];
        while self.tok == Tok::Punct(',') {
            self.advance()?;
            out.push(self.poly(ring)?);
        }
        Ok(out)
    }

    // polynomial grammar: poly = term (('+'|'-') term)*;
    // term = factor ('*' factor)*; factor = atom ('^' int)?;
    // atom = integer | variable | '(' poly ')'
    fn poly(&mut self, ring: &Ring) -> Result<Polynomial> {
        let field = *ring.field();
        let order = ring.order();
        let mut neg = false;
        if self.tok == Tok::Punct('-') {
            neg = true;
            self.advance()?;
        }
        let mut acc = self.poly_term(ring)?;
        if neg {
            acc = acc.neg(&field);
        }
        loop {
            let sub = match self.tok {
                Tok::Punct('+') => false,
                Tok::Punct('-') => true,
                _ => break,
            };
            self.advance()?;
            let t = self.poly_term(ring)?;
            acc = if sub {
                acc.sub(&t, &field, order)
            } else {
                acc.add(&t, &field, order)
            };
        }
        Ok(acc)
    }

    fn poly_term(&mut self, ring: &Ring) -> Result<Polynomial> {
        let field = *ring.field();
        let order = ring.order();
        let mut acc = self.poly_factor(ring)?;
        while self.tok == Tok::Punct('*') {
            self.advance()?;
            let f = self.poly_factor(ring)?;
            acc = acc.mul(&f, &field, order);
        }
        Ok(acc)
    }

    fn poly_factor(&mut self, ring: &Ring) -> Result<Polynomial> {
        let base = self.poly_atom(ring)?;
        if self.tok == Tok::Punct('^') {
            self.advance()?;
            let loc = self.loc;
            let e = self.int()?;
            if !(0..=64).contains(&e) {
                return Err(self.lx.err(loc, format!("exponent out of range: {e}")));
            }
            let field = *ring.field();
            let order = ring.order();
            let mut acc = Polynomial::constant(&field, 1, ring.nvars());
            for _ in 0..e {
                acc = acc.mul(&base, &field, order);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn poly_atom(&mut self, ring: &Ring) -> Result<Polynomial> {
        match self.tok.clone() {
            Tok::Int(n) => {
                self.advance()?;
                let c = ring.field().reduce_i64(n);
                Ok(Polynomial::constant(ring.field(), c, ring.nvars()))
            }
            Tok::Ident(v) => {
                let loc = self.loc;
                self.advance()?;
                let Some(i) = ring.vars().iter().position(|w| *w == v) else {
                    return Err(self.lx.err(loc, format!("unknown variable: {v}")));
                };
                Ok(Polynomial::monomial(1, Monomial::var(ring.nvars(), i)))
            }
            Tok::Punct('(') => {
                // recursion guard: parenthesis depth is the only unbounded
                // recursion in the grammar
                if self.depth >= 64 {
                    return Err(self.err("expression nested too deeply"));
                }
                self.depth += 1;
                self.advance()?;
                let p = self.poly(ring)?;
                self.expect_punct(')')?;
                self.depth -= 1;
                Ok(p)
            }
            other => Err(self.err(format!("expected a polynomial atom, found {other:?}"))),
        }
    }
}

fn op_kind(s: &str) -> Option<OpKind> {
    Some(match s {
        "transpose" => OpKind::Transpose,
        "syzygy" => OpKind::Syzygy,
        "lambda" => OpKind::Lambda,
        "tfunctor" => OpKind::TFunctor,
        "link" => OpKind::Link,
        "ext" => OpKind::Ext,
        "tor" => OpKind::Tor,
        "hom" => OpKind::Hom,
        "dual" => OpKind::Dual,
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_minimal_session_parses() {
        let s = parse_session(
            "ring R = F101[x,y]/(x*y);\nmodule M = R/(x);\nprint report(M);\n",
        )
        .unwrap();
        assert_eq!(s.stmts.len(), 3);
    }

    #[test]
    fn operator_nodes_resolve() {
        let s = parse_session(
            "ring R = F101[x,y];\nmodule M = R/(x);\nmodule N = lambda(M);\nmodule E = ext(M, N, 1);\n",
        )
        .unwrap();
        assert_eq!(s.stmts.len(), 4);
    }

    #[test]
    fn misspelled_names_are_located() {
        let err = parse_session("ring R = F101[x,y];\nmodule M = R/(x);\nprint report(Mx);\n")
            .unwrap_err();
        match err {
            Error::Parse { line, msg, .. } => {
                assert_eq!(line, 3);
                assert!(msg.contains("Mx"), "{msg}");
            }
            other => panic!("unexpected error: {other:?}"),
        }
    }

    #[test]
    fn non_prime_modulus_is_rejected() {
        let err = parse_session("ring R = F100[x];").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn coker_matrices_infer_column_degrees() {
        let s = parse_session(
            "ring R = F101[x,y];\nmodule M = coker [[x, y^2], [1, 0]] shifts (0, 1);\n",
        )
        .unwrap();
        let Stmt::Module {
            expr: ModuleExpr::Coker { matrix, .. },
            ..
        } = &s.stmts[1]
        else {
            panic!("expected a coker module");
        };
        assert_eq!(matrix.source.shifts, vec![1, 2]);
    }

    #[test]
    fn polynomials_parse_with_precedence() {
        let ring = Ring::polynomial_ring(
            PrimeField::new(101).unwrap(),
            vec!["x".into(), "y".into()],
        )
        .unwrap();
        let p = parse_polynomial("(x + y)^2 - 2*x*y", &ring).unwrap();
        assert_eq!(p.num_terms(), 2); // x^2 + y^2
        assert!(parse_polynomial("x + z", &ring).is_err());
        assert!(parse_polynomial("x +", &ring).is_err());
    }

    #[test]
    fn claims_and_settings_parse() {
        let s = parse_session(
            "ring R = F101[x,y];\nmodule M = R/(x);\nset bound = 8;\nclaim depth(M) = 1;\nclaim stable(M) = true;\n",
        )
        .unwrap();
        assert_eq!(s.stmts.len(), 5);
        assert!(parse_session("ring R = F101[x];\nset bound = 0;\n").is_err());
    }
}
