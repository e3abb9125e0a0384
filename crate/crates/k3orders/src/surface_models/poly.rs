//! Multivariate polynomials over a [`CoefficientRing`] and an ascii parser.

use std::collections::BTreeMap;
use std::fmt;

use super::ring::{CoefficientRing, RingElem};
use super::ModelError;

/// Sparse polynomial; the exponent vector follows `vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ring: CoefficientRing,
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, RingElem>,
}

impl Poly {
    pub fn zero(ring: &CoefficientRing, vars: &[String]) -> Self {
        Self {
            ring: ring.clone(),
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &CoefficientRing, vars: &[String], c: RingElem) -> Self {
        let mut p = Self::zero(ring, vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn var(ring: &CoefficientRing, vars: &[String], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(ring, vars);
        p.add_term(e, ring.one());
        p
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, RingElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: RingElem) {
        let r = &self.ring;
        let sum = match self.terms.get(&e) {
            Some(old) => r.add(old, &c),
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(&self.ring, &self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), self.ring.neg(c));
        }
        out
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &RingElem) -> Poly {
        let mut out = Poly::zero(&self.ring, &self.vars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), self.ring.mul(x, c));
        }
        out
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero(&self.ring, &self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, self.ring.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> Poly {
        let mut acc = Poly::constant(&self.ring, &self.vars, self.ring.one());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Replaces variable `i` by `images[i]` everywhere.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.vars.len());
        let mut out = Poly::zero(&self.ring, &self.vars);
        let mut cache: BTreeMap<(usize, u32), Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut t = Poly::constant(&self.ring, &self.vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let f = cache.entry((i, k)).or_insert_with(|| images[i].pow(k));
                    t = t.mul(f);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Weighted degrees of all terms.
    pub fn weighted_degrees(&self, weights: &[u32]) -> Vec<u32> {
        let mut d: Vec<u32> = self
            .terms
            .keys()
            .map(|e| e.iter().zip(weights).map(|(a, w)| a * w).sum())
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Largest term in lexicographic exponent order.
    pub fn leading_term(&self) -> Option<(Vec<u32>, RingElem)> {
        self.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))
    }

    pub fn coefficient(&self, e: &[u32]) -> Option<&RingElem> {
        self.terms.get(e)
    }

    /// Coefficient-wise reduction into characteristic `p`.
    pub fn reduce_to(&self, p: u64) -> Result<Poly, ModelError> {
        let target = self.ring.reduce_to(p)?;
        let mut out = Poly::zero(&target, &self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), self.ring.reduce_elem(c, &target));
        }
        Ok(out)
    }

    pub fn show_monomial(&self, e: &[u32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| {
                if k == 1 {
                    self.vars[i].clone()
                } else {
                    format!("{}^{k}", self.vars[i])
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let m = self.show_monomial(e);
                let c = self.ring.show(c);
                match (c.as_str(), m.as_str()) {
                    (_, "1") => c,
                    ("1", _) => m,
                    ("-1", _) => format!("-{m}"),
                    _ => format!("{c}*{m}"),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, ModelError> {
    let mut out = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(&ch) = it.peek() {
        if ch.is_whitespace() {
            it.next();
        } else if ch.is_ascii_digit() {
            let mut n = 0i64;
            while let Some(d) = it.peek().and_then(|c| c.to_digit(10)) {
                n = n * 10 + d as i64;
                it.next();
            }
            out.push(Tok::Num(n));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let mut id = String::new();
            while let Some(&c) = it.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    id.push(c);
                    it.next();
                } else {
                    break;
                }
            }
            out.push(Tok::Ident(id));
        } else if "+-*^()".contains(ch) {
            out.push(Tok::Op(ch));
            it.next();
        } else {
            return Err(ModelError::Parse(format!("unexpected character {ch:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a CoefficientRing,
    vars: &'a [String],
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> ModelError {
        ModelError::Parse(format!("{what} at token {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Poly, ModelError> {
        let mut acc = if self.eat('-') {
            self.product()?.neg()
        } else {
            self.product()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.product()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.product()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Poly, ModelError> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly, ModelError> {
        let base = self.atom()?;
        if self.eat('^') {
            let k = match self.peek() {
                Some(Tok::Num(k)) => *k,
                _ => return Err(self.err("expected an integer exponent")),
            };
            self.pos += 1;
            let k = u32::try_from(k).map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(k))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, ModelError> {
        let tok = self.peek().cloned().ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Poly::constant(self.ring, self.vars, self.ring.int(n))),
            Tok::Ident(id) if id == "zeta" => Ok(Poly::constant(self.ring, self.vars, self.ring.zeta_pow(1))),
            Tok::Ident(id) => match self.vars.iter().position(|v| *v == id) {
                Some(i) => Ok(Poly::var(self.ring, self.vars, i)),
                None => Err(ModelError::VariableMismatch(id)),
            },
            Tok::Op('(') => {
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Tok::Op('-') => Ok(self.power()?.neg()),
            Tok::Op(c) => Err(self.err(&format!("unexpected {c:?}"))),
        }
    }
}

/// Parses ascii math with `+ - * ^`, parentheses, integers, the variables and `zeta`.
pub fn parse_poly(src: &str, ring: &CoefficientRing, vars: &[String]) -> Result<Poly, ModelError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
        ring,
        vars,
        src,
    };
    let out = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses `lhs = rhs` as `lhs - rhs`; a bare expression is taken as `expr = 0`.
pub fn parse_equation(src: &str, ring: &CoefficientRing, vars: &[String]) -> Result<Poly, ModelError> {
    match src.split_once('=') {
        Some((l, r)) => Ok(parse_poly(l, ring, vars)?.sub(&parse_poly(r, ring, vars)?)),
        None => parse_poly(src, ring, vars),
    }
}
