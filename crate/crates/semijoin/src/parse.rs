//! Text formats: database files, expression strings, tuple literals, and
//! the renderers that round-trip them.
//!
//! Database files:
//!
//! ```text
//! # comment to end of line
//! vocab { order }              # optional; enables `<`
//! pred P/2 { (1,2) (2,3) }     # extra predicate with explicit interpretation
//! rel R/2 { (a,1) (b,2) }
//! rel S/1 { }
//! ```
//!
//! Expressions:
//!
//! ```text
//! R
//! (E1 union E2)   (E1 diff E2)   (E1 isect E2)
//! project[1,3](E)   project[](E)
//! select[COND](E)
//! (E1 semijoin[COND] E2)
//! ```
//!
//! Conditions combine atoms with `&`, `|`, `!` and parentheses; atoms are
//! `x1 = y2`, `x1 != x2`, `y1 < y2`, `P(x1,y1)`, plus the literals `true`
//! and `false`. `x<i>` refers to the i-th component of the left operand,
//! `y<j>` to the j-th component of the right one.

use std::collections::BTreeMap;

use crate::condition::{Atom, Condition, Var, Vocabulary};
use crate::database::{Database, Schema};
use crate::error::Error;
use crate::expr::Expr;
use crate::value::{Tuple, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Slash,
    Eq,
    NotEq,
    Lt,
    Amp,
    Pipe,
    Bang,
    Eof,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(i) => write!(f, "`{i}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Eq => write!(f, "`=`"),
            Tok::NotEq => write!(f, "`!=`"),
            Tok::Lt => write!(f, "`<`"),
            Tok::Amp => write!(f, "`&`"),
            Tok::Pipe => write!(f, "`|`"),
            Tok::Bang => write!(f, "`!`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err_at(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Token>, Error> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = src.chars().peekable();
    macro_rules! push {
        ($tok:expr, $l:expr, $c:expr) => {
            out.push(Token {
                tok: $tok,
                line: $l,
                col: $c,
            })
        };
    }
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            '(' | ')' | '[' | ']' | '{' | '}' | ',' | '/' | '=' | '<' | '&' | '|' => {
                chars.next();
                col += 1;
                let tok = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    ',' => Tok::Comma,
                    '/' => Tok::Slash,
                    '=' => Tok::Eq,
                    '<' => Tok::Lt,
                    '&' => Tok::Amp,
                    _ => Tok::Pipe,
                };
                push!(tok, tl, tc);
            }
            '!' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'=') {
                    chars.next();
                    col += 1;
                    push!(Tok::NotEq, tl, tc);
                } else {
                    push!(Tok::Bang, tl, tc);
                }
            }
            '-' => {
                chars.next();
                col += 1;
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                if digits.is_empty() {
                    return Err(err_at(tl, tc, "expected digits after `-`"));
                }
                let v: i64 = format!("-{digits}")
                    .parse()
                    .map_err(|_| err_at(tl, tc, "integer out of range"))?;
                push!(Tok::Int(v), tl, tc);
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let v: i64 = digits
                    .parse()
                    .map_err(|_| err_at(tl, tc, "integer out of range"))?;
                push!(Tok::Int(v), tl, tc);
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        ident.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                push!(Tok::Ident(ident), tl, tc);
            }
            other => {
                return Err(err_at(tl, tc, format!("unexpected character `{other}`")));
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Parser, Error> {
        Ok(Parser {
            tokens: lex(src)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<Token, Error> {
        let t = self.next();
        if t.tok == tok {
            Ok(t)
        } else {
            Err(err_at(
                t.line,
                t.col,
                format!("expected {tok}, found {}", t.tok),
            ))
        }
    }

    fn at_ident(&self, word: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == word)
    }

    fn error_here(&self, message: impl Into<String>) -> Error {
        err_at(self.peek().line, self.peek().col, message)
    }
}

const RESERVED: &[&str] = &[
    "union", "diff", "isect", "project", "select", "semijoin", "true", "false", "vocab", "order",
    "rel", "pred",
];

/// Parse a database file. See the module documentation for the grammar.
pub fn parse_database(src: &str) -> Result<Database, Error> {
    let mut p = Parser::new(src)?;
    let mut vocab = Vocabulary::equality_only();
    if p.at_ident("vocab") {
        p.next();
        p.expect(Tok::LBrace)?;
        if p.at_ident("order") {
            p.next();
            vocab = Vocabulary::with_order();
        }
        p.expect(Tok::RBrace)?;
    }
    let mut schema = Schema::new();
    let mut rel_tuples: BTreeMap<String, Vec<Tuple>> = BTreeMap::new();
    loop {
        let t = p.next();
        match &t.tok {
            Tok::Eof => break,
            Tok::Ident(word) if word == "rel" || word == "pred" => {
                let is_rel = word == "rel";
                let name_tok = p.next();
                let name = match name_tok.tok {
                    Tok::Ident(n) => n,
                    other => {
                        return Err(err_at(
                            name_tok.line,
                            name_tok.col,
                            format!("expected a name, found {other}"),
                        ))
                    }
                };
                if RESERVED.contains(&name.as_str()) {
                    return Err(err_at(
                        name_tok.line,
                        name_tok.col,
                        format!("`{name}` is a reserved word"),
                    ));
                }
                p.expect(Tok::Slash)?;
                let arity_tok = p.next();
                let arity = match arity_tok.tok {
                    Tok::Int(v) if v >= 1 => v as usize,
                    _ => {
                        return Err(err_at(
                            arity_tok.line,
                            arity_tok.col,
                            "expected an arity >= 1",
                        ))
                    }
                };
                let tuples = parse_tuple_block(&mut p, &name, arity)?;
                if is_rel {
                    if vocab.contains_name(&name) {
                        return Err(err_at(
                            name_tok.line,
                            name_tok.col,
                            Error::NameClash(name).to_string(),
                        ));
                    }
                    schema
                        .add(&name, arity)
                        .map_err(|e| err_at(name_tok.line, name_tok.col, e.to_string()))?;
                    rel_tuples.insert(name, tuples);
                } else {
                    if schema.contains(&name) {
                        return Err(err_at(
                            name_tok.line,
                            name_tok.col,
                            Error::NameClash(name).to_string(),
                        ));
                    }
                    vocab
                        .add_predicate(&name, arity, tuples)
                        .map_err(|e| err_at(name_tok.line, name_tok.col, e.to_string()))?;
                }
            }
            Tok::Ident(word) if word == "vocab" => {
                return Err(err_at(
                    t.line,
                    t.col,
                    "`vocab` must appear once, before any declarations",
                ));
            }
            other => {
                return Err(err_at(
                    t.line,
                    t.col,
                    format!("expected `rel` or `pred`, found {other}"),
                ));
            }
        }
    }
    Database::with_contents(schema, vocab, rel_tuples)
}

fn parse_tuple_block(p: &mut Parser, name: &str, arity: usize) -> Result<Vec<Tuple>, Error> {
    p.expect(Tok::LBrace)?;
    let mut tuples = Vec::new();
    loop {
        let t = p.peek().clone();
        match t.tok {
            Tok::RBrace => {
                p.next();
                break;
            }
            Tok::LParen => {
                p.next();
                let mut vals = Vec::new();
                if p.peek().tok != Tok::RParen {
                    loop {
                        let vt = p.next();
                        match vt.tok {
                            Tok::Int(v) => vals.push(Value::Int(v)),
                            Tok::Ident(s) => vals.push(Value::Sym(s)),
                            other => {
                                return Err(err_at(
                                    vt.line,
                                    vt.col,
                                    format!("expected a value, found {other}"),
                                ))
                            }
                        }
                        if p.peek().tok == Tok::Comma {
                            p.next();
                        } else {
                            break;
                        }
                    }
                }
                p.expect(Tok::RParen)?;
                if vals.len() != arity {
                    return Err(err_at(
                        t.line,
                        t.col,
                        format!(
                            "tuple of length {} in `{name}`, which has arity {arity}",
                            vals.len()
                        ),
                    ));
                }
                tuples.push(Tuple::new(vals));
            }
            other => {
                return Err(err_at(
                    t.line,
                    t.col,
                    format!("expected a tuple or `}}`, found {other}"),
                ));
            }
        }
    }
    Ok(tuples)
}

/// Parse an expression against a schema and vocabulary. The result is
/// arity-checked and validated.
pub fn parse_expression(src: &str, schema: &Schema, vocab: &Vocabulary) -> Result<Expr, Error> {
    let mut p = Parser::new(src)?;
    let e = parse_expr(&mut p, schema, vocab)?;
    let t = p.peek();
    if t.tok != Tok::Eof {
        return Err(err_at(
            t.line,
            t.col,
            format!("unexpected {} after the expression", t.tok),
        ));
    }
    Ok(e)
}

fn parse_expr(p: &mut Parser, schema: &Schema, vocab: &Vocabulary) -> Result<Expr, Error> {
    let t = p.next();
    match t.tok {
        Tok::Ident(word) if word == "project" => {
            p.expect(Tok::LBracket)?;
            let mut positions = Vec::new();
            if p.peek().tok != Tok::RBracket {
                loop {
                    let it = p.next();
                    match it.tok {
                        Tok::Int(v) if v >= 1 => positions.push(v as usize),
                        _ => return Err(err_at(it.line, it.col, "expected a position >= 1")),
                    }
                    if p.peek().tok == Tok::Comma {
                        p.next();
                    } else {
                        break;
                    }
                }
            }
            p.expect(Tok::RBracket)?;
            p.expect(Tok::LParen)?;
            let child = parse_expr(p, schema, vocab)?;
            p.expect(Tok::RParen)?;
            Expr::project(positions, child).map_err(|e| err_at(t.line, t.col, e.to_string()))
        }
        Tok::Ident(word) if word == "select" => {
            p.expect(Tok::LBracket)?;
            let cond = parse_cond(p)?;
            p.expect(Tok::RBracket)?;
            p.expect(Tok::LParen)?;
            let child = parse_expr(p, schema, vocab)?;
            p.expect(Tok::RParen)?;
            cond.validate(child.arity(), 0, vocab)
                .and_then(|()| Expr::select(cond, child))
                .map_err(|e| err_at(t.line, t.col, e.to_string()))
        }
        Tok::Ident(name) => {
            if RESERVED.contains(&name.as_str()) {
                return Err(err_at(t.line, t.col, format!("unexpected `{name}`")));
            }
            match schema.arity(&name) {
                Some(arity) => Ok(Expr::rel(name, arity)),
                None => Err(err_at(
                    t.line,
                    t.col,
                    Error::UnknownRelation(name).to_string(),
                )),
            }
        }
        Tok::LParen => {
            let left = parse_expr(p, schema, vocab)?;
            let op = p.next();
            let result = match &op.tok {
                Tok::Ident(w) if w == "union" => {
                    let right = parse_expr(p, schema, vocab)?;
                    Expr::union(left, right)
                }
                Tok::Ident(w) if w == "diff" => {
                    let right = parse_expr(p, schema, vocab)?;
                    Expr::diff(left, right)
                }
                Tok::Ident(w) if w == "isect" => {
                    let right = parse_expr(p, schema, vocab)?;
                    Expr::isect(left, right)
                }
                Tok::Ident(w) if w == "semijoin" => {
                    p.expect(Tok::LBracket)?;
                    let cond = parse_cond(p)?;
                    p.expect(Tok::RBracket)?;
                    let right = parse_expr(p, schema, vocab)?;
                    cond.validate(left.arity(), right.arity(), vocab)
                        .and_then(|()| Expr::semijoin(cond, left, right))
                }
                other => {
                    return Err(err_at(
                        op.line,
                        op.col,
                        format!("expected `union`, `diff`, `isect` or `semijoin`, found {other}"),
                    ))
                }
            };
            let e = result.map_err(|e| err_at(op.line, op.col, e.to_string()))?;
            p.expect(Tok::RParen)?;
            Ok(e)
        }
        other => Err(err_at(
            t.line,
            t.col,
            format!("expected an expression, found {other}"),
        )),
    }
}

fn parse_cond(p: &mut Parser) -> Result<Condition, Error> {
    let mut c = parse_cond_and(p)?;
    while p.peek().tok == Tok::Pipe {
        p.next();
        let r = parse_cond_and(p)?;
        c = Condition::or(c, r);
    }
    Ok(c)
}

fn parse_cond_and(p: &mut Parser) -> Result<Condition, Error> {
    let mut c = parse_cond_unary(p)?;
    while p.peek().tok == Tok::Amp {
        p.next();
        let r = parse_cond_unary(p)?;
        c = Condition::and(c, r);
    }
    Ok(c)
}

fn parse_cond_unary(p: &mut Parser) -> Result<Condition, Error> {
    let t = p.peek().clone();
    match t.tok {
        Tok::Bang => {
            p.next();
            let inner = match p.peek().tok {
                Tok::LParen => {
                    p.next();
                    let c = parse_cond(p)?;
                    p.expect(Tok::RParen)?;
                    c
                }
                Tok::Bang => parse_cond_unary(p)?,
                Tok::Ident(ref w) if w == "true" => {
                    p.next();
                    Condition::True
                }
                Tok::Ident(ref w) if w == "false" => {
                    p.next();
                    Condition::False
                }
                _ => {
                    return Err(p.error_here("expected `(`, `!`, `true` or `false` after `!`"));
                }
            };
            Ok(Condition::not(inner))
        }
        Tok::LParen => {
            p.next();
            let c = parse_cond(p)?;
            p.expect(Tok::RParen)?;
            Ok(c)
        }
        Tok::Ident(ref w) if w == "true" => {
            p.next();
            Ok(Condition::True)
        }
        Tok::Ident(ref w) if w == "false" => {
            p.next();
            Ok(Condition::False)
        }
        Tok::Ident(ref w) => {
            if let Some(v) = parse_var_name(w) {
                p.next();
                let op = p.next();
                let rhs_tok = p.next();
                let rhs = match &rhs_tok.tok {
                    Tok::Ident(s) => parse_var_name(s).ok_or_else(|| {
                        err_at(
                            rhs_tok.line,
                            rhs_tok.col,
                            "expected a variable like `x1` or `y2`",
                        )
                    })?,
                    other => {
                        return Err(err_at(
                            rhs_tok.line,
                            rhs_tok.col,
                            format!("expected a variable, found {other}"),
                        ))
                    }
                };
                match op.tok {
                    Tok::Eq => Ok(Condition::eq(v, rhs)),
                    Tok::NotEq => Ok(Condition::neq(v, rhs)),
                    Tok::Lt => Ok(Condition::lt(v, rhs)),
                    other => Err(err_at(
                        op.line,
                        op.col,
                        format!("expected `=`, `!=` or `<`, found {other}"),
                    )),
                }
            } else {
                // predicate atom: P(x1,y2)
                let name = w.clone();
                p.next();
                p.expect(Tok::LParen)?;
                let mut args = Vec::new();
                if p.peek().tok != Tok::RParen {
                    loop {
                        let at = p.next();
                        match &at.tok {
                            Tok::Ident(s) => match parse_var_name(s) {
                                Some(v) => args.push(v),
                                None => {
                                    return Err(err_at(
                                        at.line,
                                        at.col,
                                        "predicate arguments must be variables",
                                    ))
                                }
                            },
                            other => {
                                return Err(err_at(
                                    at.line,
                                    at.col,
                                    format!("expected a variable, found {other}"),
                                ))
                            }
                        }
                        if p.peek().tok == Tok::Comma {
                            p.next();
                        } else {
                            break;
                        }
                    }
                }
                p.expect(Tok::RParen)?;
                Ok(Condition::Atom(Atom::Pred(name, args)))
            }
        }
        other => Err(err_at(
            t.line,
            t.col,
            format!("expected a condition, found {other}"),
        )),
    }
}

/// `x<i>` or `y<j>` with a nonempty digit suffix.
fn parse_var_name(s: &str) -> Option<Var> {
    let (head, digits) = s.split_at(1);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let idx: usize = digits.parse().ok()?;
    match head {
        "x" => Some(Var::Left(idx)),
        "y" => Some(Var::Right(idx)),
        _ => None,
    }
}

/// Parse a tuple literal such as `(a,1)` or `()`.
pub fn parse_tuple(src: &str) -> Result<Tuple, Error> {
    let mut p = Parser::new(src)?;
    p.expect(Tok::LParen)?;
    let mut vals = Vec::new();
    if p.peek().tok != Tok::RParen {
        loop {
            let t = p.next();
            match t.tok {
                Tok::Int(v) => vals.push(Value::Int(v)),
                Tok::Ident(s) => vals.push(Value::Sym(s)),
                other => {
                    return Err(err_at(
                        t.line,
                        t.col,
                        format!("expected a value, found {other}"),
                    ))
                }
            }
            if p.peek().tok == Tok::Comma {
                p.next();
            } else {
                break;
            }
        }
    }
    p.expect(Tok::RParen)?;
    let t = p.peek();
    if t.tok != Tok::Eof {
        return Err(err_at(t.line, t.col, "trailing input after the tuple"));
    }
    Ok(Tuple::new(vals))
}

/// Render an expression as text that parses back to a structurally
/// identical expression.
pub fn render_expression(e: &Expr) -> String {
    e.to_string()
}

/// Render a database in the file format. Parsing the output yields an equal
/// database.
pub fn render_database(db: &Database) -> String {
    let mut out = String::new();
    if db.vocab().ordered() {
        out.push_str("vocab { order }\n");
    }
    for (name, pred) in db.vocab().predicates() {
        out.push_str(&format!("pred {name}/{} {{", pred.arity));
        for t in &pred.tuples {
            out.push_str(&format!(" {t}"));
        }
        out.push_str(" }\n");
    }
    for (name, tuples) in db.relations() {
        let arity = db.schema().arity(name).unwrap();
        out.push_str(&format!("rel {name}/{arity} {{"));
        for t in tuples {
            out.push_str(&format!(" {t}"));
        }
        out.push_str(" }\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_product_tables() {
        let db = parse_database(
            "rel R/1 { (a) (b) } rel S/1 { (1) (2) } rel T/2 { (a,1) (a,2) (b,1) (b,2) }",
        )
        .unwrap();
        assert_eq!(db.relation("R").unwrap().len(), 2);
        assert_eq!(db.relation("T").unwrap().len(), 4);
        assert!(!db.vocab().ordered());
    }

    #[test]
    fn parses_empty_relation() {
        let db = parse_database("rel R/2 { }").unwrap();
        assert!(db.relation("R").unwrap().is_empty());
        assert_eq!(db.schema().arity("R"), Some(2));
    }

    #[test]
    fn parses_ordered_vocabulary() {
        let db = parse_database("vocab { order } rel S/1 { (1) (2) (3) }").unwrap();
        assert!(db.vocab().ordered());
        assert_eq!(db.relation("S").unwrap().len(), 3);
    }

    #[test]
    fn parses_extra_predicates() {
        let db = parse_database("pred P/2 { (1,2) } rel R/1 { (1) }").unwrap();
        assert_eq!(db.vocab().predicate("P").unwrap().arity, 2);
    }

    #[test]
    fn comments_and_whitespace_are_ignored() {
        let db = parse_database("# heading\nrel R/1 { # inline\n (a) }\n").unwrap();
        assert_eq!(db.relation("R").unwrap().len(), 1);
    }

    #[test]
    fn rejects_arity_mismatch_with_position() {
        let err = parse_database("rel R/2 {\n (a) }").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn rejects_duplicate_relation() {
        assert!(parse_database("rel R/1 { } rel R/2 { }").is_err());
    }

    #[test]
    fn rejects_relation_predicate_clash() {
        assert!(parse_database("pred P/1 { } rel P/1 { }").is_err());
        assert!(parse_database("rel P/1 { } pred P/1 { }").is_err());
    }

    fn product_schema() -> (Schema, Vocabulary) {
        (
            Schema::from_pairs([("R", 1), ("S", 1), ("T", 2)]).unwrap(),
            Vocabulary::equality_only(),
        )
    }

    #[test]
    fn parses_walk_expression() {
        let schema = Schema::from_pairs([("R", 2)]).unwrap();
        let vocab = Vocabulary::equality_only();
        let e = parse_expression("(R semijoin[x2 = y1] R)", &schema, &vocab).unwrap();
        assert_eq!(e.arity(), 2);
        assert_eq!(e.to_string(), "(R semijoin[x2 = y1] R)");
    }

    #[test]
    fn parses_projection() {
        let schema = Schema::from_pairs([("R", 2)]).unwrap();
        let e = parse_expression("project[1](R)", &schema, &Vocabulary::equality_only()).unwrap();
        assert_eq!(e.arity(), 1);
    }

    #[test]
    fn parses_product_containment_test() {
        // over binary R, S and a 4-ary T
        let schema = Schema::from_pairs([("R", 2), ("S", 2), ("T", 4)]).unwrap();
        let vocab = Vocabulary::equality_only();
        let e = parse_expression(
            "(T diff ((T semijoin[x1=y1 & x2=y2] R) semijoin[x3=y1 & x4=y2] S))",
            &schema,
            &vocab,
        )
        .unwrap();
        assert_eq!(e.arity(), 4);
    }

    #[test]
    fn rejects_unknown_relation() {
        let (schema, vocab) = product_schema();
        let err = parse_expression("Q", &schema, &vocab).unwrap_err();
        assert!(err.to_string().contains("unknown relation"));
    }

    #[test]
    fn rejects_arity_mismatch_in_union() {
        let (schema, vocab) = product_schema();
        assert!(parse_expression("(R union T)", &schema, &vocab).is_err());
    }

    #[test]
    fn rejects_out_of_range_positions_and_variables() {
        let (schema, vocab) = product_schema();
        assert!(parse_expression("project[3](T)", &schema, &vocab).is_err());
        assert!(parse_expression("select[x3 = x1](T)", &schema, &vocab).is_err());
        assert!(parse_expression("(R semijoin[x1 = y2] S)", &schema, &vocab).is_err());
    }

    #[test]
    fn rejects_order_atom_without_order() {
        let (schema, vocab) = product_schema();
        assert!(matches!(
            parse_expression("select[x1 < x2](T)", &schema, &vocab),
            Err(Error::Parse { .. })
        ));
        let ordered = Vocabulary::with_order();
        assert!(parse_expression("select[x1 < x2](T)", &schema, &ordered).is_ok());
    }

    #[test]
    fn roundtrips_simple_expressions() {
        let (schema, vocab) = product_schema();
        for src in [
            "project[1](T)",
            "(R semijoin[x1 != y1] R)",
            "(T diff ((T semijoin[x1 = y1] R) semijoin[x2 = y1] S))",
            "select[true](R)",
            "((R union R) isect R)",
            "project[](T)",
        ] {
            let e = parse_expression(src, &schema, &vocab).unwrap();
            let again = parse_expression(&render_expression(&e), &schema, &vocab).unwrap();
            assert_eq!(e, again, "{src}");
        }
    }

    #[test]
    fn roundtrips_database_files() {
        let src = "vocab { order }\nrel R/2 { (1,2) (2,3) }\nrel S/1 { }\n";
        let db = parse_database(src).unwrap();
        let rendered = render_database(&db);
        let db2 = parse_database(&rendered).unwrap();
        assert_eq!(db, db2);
    }

    #[test]
    fn parses_tuple_literals() {
        assert_eq!(parse_tuple("()").unwrap(), Tuple::empty());
        let t = parse_tuple("(a,1)").unwrap();
        assert_eq!(t.to_string(), "(a,1)");
        assert!(parse_tuple("(a,)").is_err());
        assert!(parse_tuple("(1) x").is_err());
    }

    #[test]
    fn parses_predicate_atoms_in_conditions() {
        let schema = Schema::from_pairs([("R", 2)]).unwrap();
        let mut vocab = Vocabulary::equality_only();
        vocab
            .add_predicate("P", 2, vec![Tuple::new(vec![1.into(), 2.into()])])
            .unwrap();
        let e = parse_expression("select[P(x1,x2)](R)", &schema, &vocab).unwrap();
        assert_eq!(render_expression(&e), "select[P(x1,x2)](R)");
        assert!(parse_expression("select[Q(x1)](R)", &schema, &vocab).is_err());
        assert!(parse_expression("select[P(x1)](R)", &schema, &vocab).is_err());
    }
}
