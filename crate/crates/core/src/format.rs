//! Versioned line-oriented text format for algebras, quotient maps, automorphism systems and
//! certificates.
//!
//! ```text
//! multiloop-format 1 <kind>
//! <key> <fields…>
//! begin <kind> [label]
//! …
//! end <kind>
//! ```
//!
//! Scalars are written `cyclo(N)[c₀, c₁, …]`; on input `zeta(n)^k` and rationals are accepted
//! too. Integer matrices are written `a b;c d`. Blank lines and text after `#` are ignored.

use crate::algcore::FinGradedAlgebra;
use crate::autograde::AutomorphismSystem;
use crate::corresp::{RealizationCertificate, TransportCertificate};
use crate::cyclo::CycloNumber;
use crate::error::{Error, Result};
use crate::lattice::{BarElement, BarGroup, Character, IntMatrix, QuotientMap};
use crate::linalg::{zero_vector, Matrix};
use crate::loopcore::{GammaFiniteAlgebra, GradedIsoWitness};

pub const VERSION: u32 = 1;
const MAGIC: &str = "multiloop-format";

/// Parsed block: keyed lines plus nested blocks.
#[derive(Clone, Debug, Default)]
pub struct Node {
    pub kind: String,
    pub label: Option<String>,
    pub lines: Vec<(usize, String, String)>,
    pub children: Vec<Node>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

impl Node {
    fn new(kind: &str) -> Self {
        Node {
            kind: kind.to_string(),
            ..Node::default()
        }
    }

    fn push(&mut self, key: &str, rest: impl Into<String>) {
        self.lines.push((0, key.to_string(), rest.into()));
    }

    fn child(&mut self, label: Option<&str>, mut node: Node) {
        node.label = label.map(str::to_string);
        self.children.push(node);
    }

    fn all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = (usize, &'a str)> + 'a {
        self.lines
            .iter()
            .filter(move |(_, k, _)| k == key)
            .map(|(l, _, r)| (*l, r.as_str()))
    }

    fn one<'a>(&'a self, key: &'a str) -> Result<(usize, &'a str)> {
        let mut it = self.all(key);
        let first = it.next().ok_or_else(|| perr(0, format!("{} block lacks `{key}`", self.kind)))?;
        if let Some((l, _)) = it.next() {
            return Err(perr(l, format!("duplicate `{key}`")));
        }
        Ok(first)
    }

    fn opt<'a>(&'a self, key: &'a str) -> Option<(usize, &'a str)> {
        self.all(key).next()
    }

    fn sub(&self, kind: &str, label: Option<&str>) -> Result<&Node> {
        self.children
            .iter()
            .find(|c| c.kind == kind && c.label.as_deref() == label)
            .ok_or_else(|| perr(0, format!("{} block lacks nested `{kind}`", self.kind)))
    }

    fn render(&self, out: &mut Vec<String>) {
        for (_, k, r) in &self.lines {
            if r.is_empty() {
                out.push(k.clone());
            } else {
                out.push(format!("{k} {r}"));
            }
        }
        for c in &self.children {
            match &c.label {
                Some(l) => out.push(format!("begin {} {l}", c.kind)),
                None => out.push(format!("begin {}", c.kind)),
            }
            c.render(out);
            out.push(format!("end {}", c.kind));
        }
    }
}

/// Splits a document into its top-level block.
pub fn parse_document(text: &str) -> Result<Node> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, header) = lines.next().ok_or_else(|| perr(1, "empty document"))?;
    let mut h = header.split_whitespace();
    if h.next() != Some(MAGIC) {
        return Err(perr(ln, format!("expected `{MAGIC} <version> <kind>` header")));
    }
    let version: u32 = h
        .next()
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| perr(ln, "missing version"))?;
    if version != VERSION {
        return Err(perr(ln, format!("unsupported format version {version}")));
    }
    let kind = h.next().ok_or_else(|| perr(ln, "missing kind"))?;
    let mut stack = vec![Node::new(kind)];
    for (ln, line) in lines {
        let (key, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match key {
            "begin" => {
                let mut parts = rest.split_whitespace();
                let kind = parts.next().ok_or_else(|| perr(ln, "`begin` needs a kind"))?;
                let mut node = Node::new(kind);
                node.label = parts.next().map(str::to_string);
                stack.push(node);
            }
            "end" => {
                let node = stack.pop().expect("nonempty stack");
                if stack.is_empty() || rest != node.kind {
                    return Err(perr(ln, format!("unbalanced `end {rest}`")));
                }
                stack.last_mut().expect("parent").children.push(node);
            }
            _ => stack
                .last_mut()
                .expect("nonempty stack")
                .lines
                .push((ln, key.to_string(), rest.to_string())),
        }
    }
    if stack.len() != 1 {
        return Err(perr(0, "unterminated `begin` block"));
    }
    Ok(stack.pop().expect("root"))
}

/// Values with a text representation in this format.
pub trait TextFormat: Sized {
    const KIND: &'static str;

    fn to_node(&self) -> Node;
    fn from_node(node: &Node) -> Result<Self>;

    fn to_text(&self) -> String {
        let mut out = vec![format!("{MAGIC} {VERSION} {}", Self::KIND)];
        self.to_node().render(&mut out);
        out.push(String::new());
        out.join("\n")
    }

    fn from_text(text: &str) -> Result<Self> {
        let node = parse_document(text)?;
        if node.kind != Self::KIND {
            return Err(perr(1, format!("expected a `{}` document, found `{}`", Self::KIND, node.kind)));
        }
        Self::from_node(&node)
    }
}

fn ints<T: std::str::FromStr>(line: usize, s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|t| t.parse().map_err(|_| perr(line, format!("bad integer `{t}`"))))
        .collect()
}

fn scalar(line: usize, s: &str) -> Result<CycloNumber> {
    s.parse().map_err(|e: Error| perr(line, e.to_string()))
}

// `<n indices> <scalar>`
fn indexed(line: usize, s: &str, n: usize) -> Result<(Vec<usize>, CycloNumber)> {
    let mut parts = s.splitn(n + 1, char::is_whitespace);
    let mut idx = Vec::with_capacity(n);
    for _ in 0..n {
        let t = parts.next().ok_or_else(|| perr(line, "missing index"))?;
        idx.push(t.parse().map_err(|_| perr(line, format!("bad index `{t}`")))?);
    }
    let rest = parts.next().ok_or_else(|| perr(line, "missing scalar"))?;
    Ok((idx, scalar(line, rest)?))
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn int_matrix(line: usize, s: &str) -> Result<IntMatrix> {
    s.parse().map_err(|e: Error| perr(line, e.to_string()))
}

fn write_matrix(node: &mut Node, key: &str, m: &Matrix) {
    node.push(key, format!("{} {}", m.nrows(), m.ncols()));
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            let v = &m[(r, c)];
            if !v.is_zero() {
                node.push("entry", format!("{r} {c} {v}"));
            }
        }
    }
}

fn read_matrix(node: &Node, key: &str) -> Result<Matrix> {
    let (ln, shape) = node.one(key)?;
    let shape: Vec<usize> = ints(ln, shape)?;
    let [rows, cols] = shape[..] else {
        return Err(perr(ln, "matrix shape needs two integers"));
    };
    let mut m = Matrix::zeros(rows, cols);
    for (ln, e) in node.all("entry") {
        let (idx, v) = indexed(ln, e, 2)?;
        if idx[0] >= rows || idx[1] >= cols {
            return Err(perr(ln, "matrix entry out of range"));
        }
        m[(idx[0], idx[1])] = v;
    }
    Ok(m)
}

impl TextFormat for Matrix {
    const KIND: &'static str = "matrix";

    fn to_node(&self) -> Node {
        let mut n = Node::new(Self::KIND);
        write_matrix(&mut n, "shape", self);
        n
    }

    fn from_node(node: &Node) -> Result<Self> {
        read_matrix(node, "shape")
    }
}

impl TextFormat for IntMatrix {
    const KIND: &'static str = "intmatrix";

    fn to_node(&self) -> Node {
        let mut n = Node::new(Self::KIND);
        n.push("shape", format!("{} {}", self.nrows(), self.ncols()));
        if self.nrows() > 0 && self.ncols() > 0 {
            n.push("rows", self.to_string());
        }
        n
    }

    fn from_node(node: &Node) -> Result<Self> {
        let (ln, shape) = node.one("shape")?;
        let shape: Vec<usize> = ints(ln, shape)?;
        match (shape.as_slice(), node.opt("rows")) {
            ([r, c], None) if *r == 0 || *c == 0 => Ok(IntMatrix::zeros(*r, *c)),
            ([r, c], Some((ln, rows))) => {
                let m = int_matrix(ln, rows)?;
                if m.nrows() != *r || m.ncols() != *c {
                    return Err(perr(ln, "matrix does not match its shape"));
                }
                Ok(m)
            }
            _ => Err(perr(ln, "bad matrix shape")),
        }
    }
}

impl TextFormat for FinGradedAlgebra {
    const KIND: &'static str = "algebra";

    fn to_node(&self) -> Node {
        let mut n = Node::new(Self::KIND);
        n.push("group", join(self.group().moduli()));
        n.push("dim", self.dim().to_string());
        if let Some(u) = self.unit_hint() {
            n.push("unit", u.to_string());
        }
        for (i, d) in self.degrees().iter().enumerate() {
            if !d.is_zero() {
                n.push("degree", format!("{i} {}", join(&d.0)));
            }
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for (k, c) in self.product_of_basis(i, j) {
                    n.push("product", format!("{i} {j} {k} {c}"));
                }
            }
        }
        n
    }

    fn from_node(node: &Node) -> Result<Self> {
        let (ln, g) = node.one("group")?;
        let group = BarGroup::new(ints(ln, g)?).map_err(|e| perr(ln, e.to_string()))?;
        let (ln, d) = node.one("dim")?;
        let dim: usize = d.trim().parse().map_err(|_| perr(ln, "bad dimension"))?;
        let mut degrees = vec![group.zero(); dim];
        for (ln, s) in node.all("degree") {
            let v: Vec<u64> = ints(ln, s)?;
            if v.len() != group.rank() + 1 || v[0] as usize >= dim {
                return Err(perr(ln, "degree line needs an index and one residue per modulus"));
            }
            let bar = BarElement(v[1..].to_vec());
            if !group.contains(&bar) {
                return Err(perr(ln, format!("{bar} is not a reduced residue vector")));
            }
            degrees[v[0] as usize] = bar;
        }
        let mut entries = Vec::new();
        for (ln, s) in node.all("product") {
            let (idx, c) = indexed(ln, s, 3)?;
            if idx.iter().any(|&x| x >= dim) {
                return Err(perr(ln, "basis index out of range"));
            }
            entries.push((idx[0], idx[1], idx[2], c));
        }
        let a = FinGradedAlgebra::from_entries(group, degrees, entries).map_err(|e| perr(0, e.to_string()))?;
        match node.opt("unit") {
            Some((ln, u)) => {
                let u: usize = u.trim().parse().map_err(|_| perr(ln, "bad unit index"))?;
                if u >= dim {
                    return Err(perr(ln, "unit index out of range"));
                }
                Ok(a.with_unit_hint(u))
            }
            None => Ok(a),
        }
    }
}

impl TextFormat for QuotientMap {
    const KIND: &'static str = "quotient";

    fn to_node(&self) -> Node {
        let mut n = Node::new(Self::KIND);
        n.push("m", join(self.moduli()));
        n.push("basis", self.basis_change().to_string());
        n
    }

    fn from_node(node: &Node) -> Result<Self> {
        let (ln, m) = node.one("m")?;
        let m: Vec<u64> = ints(ln, m)?;
        let (lb, b) = node.one("basis")?;
        QuotientMap::new(m, int_matrix(lb, b)?).map_err(|e| perr(lb, e.to_string()))
    }
}

impl TextFormat for Character {
    const KIND: &'static str = "character";

    fn to_node(&self) -> Node {
        let mut n = Node::new(Self::KIND);
        n.push("basis", self.basis().to_string());
        for v in self.values() {
            n.push("value", v.to_string());
        }
        n
    }

    fn from_node(node: &Node) -> Result<Self> {
        let (ln, b) = node.one("basis")?;
        let values = node
            .all("value")
            .map(|(l, v)| scalar(l, v))
            .collect::<Result<Vec<_>>>()?;
        Character::new(int_matrix(ln, b)?, values).map_err(|e| perr(ln, e.to_string()))
    }
}

impl TextFormat for AutomorphismSystem {
    const KIND: &'static str = "autos";

    fn to_node(&self) -> Node {
        let mut n = Node::new(Self::KIND);
        n.push("m", join(self.orders()));
        n.child(Some("base"), self.base().to_node());
        for s in self.sigmas() {
            let mut c = Node::new("matrix");
            write_matrix(&mut c, "shape", s);
            n.child(None, c);
        }
        n
    }

    fn from_node(node: &Node) -> Result<Self> {
        let (ln, m) = node.one("m")?;
        let m: Vec<u64> = ints(ln, m)?;
        let base = FinGradedAlgebra::from_node(node.sub("algebra", Some("base"))?)?;
        let sigmas = node
            .children
            .iter()
            .filter(|c| c.kind == "matrix")
            .map(|c| read_matrix(c, "shape"))
            .collect::<Result<Vec<_>>>()?;
        AutomorphismSystem::new(base, sigmas, m).map_err(|e| perr(ln, e.to_string()))
    }
}

impl TextFormat for GammaFiniteAlgebra {
    const KIND: &'static str = "gamma-algebra";

    fn to_node(&self) -> Node {
        let mut n = Node::new(Self::KIND);
        n.child(None, self.quotient().to_node());
        n.push("dims", join(self.comp_dims()));
        let order: Vec<String> = self.basis_order().iter().map(|(t, i)| format!("{t}:{i}")).collect();
        n.push("order", order.join(" "));
        let t = self.num_components();
        for a in 0..t {
            for b in 0..t {
                let p = self.pair(a, b);
                let nonzero = p.coeffs.iter().any(|v| v.iter().any(|c| !c.is_zero()));
                if !nonzero {
                    continue;
                }
                n.push("pair", format!("{a} {b} {} {}", p.target, join(&p.shift)));
                let db = self.comp_dims()[b];
                for (idx, v) in p.coeffs.iter().enumerate() {
                    for (k, c) in v.iter().enumerate() {
                        if !c.is_zero() {
                            n.push("coeff", format!("{a} {b} {} {} {k} {c}", idx / db, idx % db));
                        }
                    }
                }
            }
        }
        n
    }

    fn from_node(node: &Node) -> Result<Self> {
        let q = QuotientMap::from_node(node.sub("quotient", None)?)?;
        let (ln, d) = node.one("dims")?;
        let dims: Vec<usize> = ints(ln, d)?;
        let t = q.order() as usize;
        if dims.len() != t {
            return Err(perr(ln, format!("expected {t} component dimensions")));
        }
        let g = q.group();
        let elems = g.elements();
        let reps = q.coset_reps();
        let mut tc: Vec<(usize, Vec<Vec<CycloNumber>>)> = (0..t * t)
            .map(|idx| {
                let (a, b) = (idx / t, idx % t);
                let c = g.index_of(&g.add(&elems[a], &elems[b]));
                (c, vec![zero_vector(dims[c]); dims[a] * dims[b]])
            })
            .collect();
        for (ln, s) in node.all("pair") {
            let v: Vec<i64> = ints(ln, s)?;
            if v.len() != 3 + q.rank() || v[..3].iter().any(|&x| x < 0 || x as usize >= t) {
                return Err(perr(ln, "pair line needs θ, θ′, θ″ and the shift"));
            }
            let (a, b, c) = (v[0] as usize, v[1] as usize, v[2] as usize);
            let expected: Vec<i64> = (0..q.rank()).map(|i| reps[a][i] + reps[b][i] - reps[c][i]).collect();
            if tc[a * t + b].0 != c || v[3..] != expected[..] {
                return Err(perr(ln, "pair target or shift disagrees with the quotient map"));
            }
        }
        for (ln, s) in node.all("coeff") {
            let (idx, c) = indexed(ln, s, 5)?;
            let (a, b, i, j, k) = (idx[0], idx[1], idx[2], idx[3], idx[4]);
            if a >= t || b >= t || i >= dims[a] || j >= dims[b] {
                return Err(perr(ln, "coefficient index out of range"));
            }
            let slot = &mut tc[a * t + b];
            if k >= dims[slot.0] {
                return Err(perr(ln, "coefficient index out of range"));
            }
            slot.1[i * dims[b] + j][k] = c;
        }
        let (lo, o) = node.one("order")?;
        let order = o
            .split_whitespace()
            .map(|tok| {
                let (a, b) = tok.split_once(':').ok_or_else(|| perr(lo, "order entries are θ:i"))?;
                Ok((
                    a.parse().map_err(|_| perr(lo, "bad θ"))?,
                    b.parse().map_err(|_| perr(lo, "bad index"))?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        GammaFiniteAlgebra::new(q, dims, tc, Some(order)).map_err(|e| perr(0, e.to_string()))
    }
}

impl TextFormat for GradedIsoWitness {
    const KIND: &'static str = "witness";

    fn to_node(&self) -> Node {
        let mut n = Node::new(Self::KIND);
        n.child(None, self.chi.to_node());
        for phi in &self.phis {
            let mut c = Node::new("matrix");
            write_matrix(&mut c, "shape", phi);
            n.child(None, c);
        }
        n
    }

    fn from_node(node: &Node) -> Result<Self> {
        let chi = Character::from_node(node.sub("character", None)?)?;
        let phis = node
            .children
            .iter()
            .filter(|c| c.kind == "matrix")
            .map(|c| read_matrix(c, "shape"))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedIsoWitness { phis, chi })
    }
}

impl TextFormat for RealizationCertificate {
    const KIND: &'static str = "realization";

    fn to_node(&self) -> Node {
        let mut n = Node::new(Self::KIND);
        n.push("m", join(&self.m));
        n.push("base-change", self.base_change.to_string());
        n.child(Some("image"), self.a.to_node());
        n.child(None, self.s.to_node());
        n.child(None, self.witness.to_node());
        n
    }

    fn from_node(node: &Node) -> Result<Self> {
        let (ln, m) = node.one("m")?;
        let (lb, b) = node.one("base-change")?;
        Ok(RealizationCertificate {
            m: ints(ln, m)?,
            base_change: int_matrix(lb, b)?,
            a: FinGradedAlgebra::from_node(node.sub("algebra", Some("image"))?)?,
            s: AutomorphismSystem::from_node(node.sub("autos", None)?)?,
            witness: GradedIsoWitness::from_node(node.sub("witness", None)?)?,
        })
    }
}

impl TextFormat for TransportCertificate {
    const KIND: &'static str = "transport";

    fn to_node(&self) -> Node {
        let mut n = Node::new(Self::KIND);
        n.push("r", self.r.to_string());
        n.child(None, self.s_prime.to_node());
        n.child(None, self.witness.to_node());
        n
    }

    fn from_node(node: &Node) -> Result<Self> {
        let (ln, r) = node.one("r")?;
        Ok(TransportCertificate {
            r: int_matrix(ln, r)?,
            s_prime: AutomorphismSystem::from_node(node.sub("autos", None)?)?,
            witness: GradedIsoWitness::from_node(node.sub("witness", None)?)?,
        })
    }
}

/// Reads a file and parses it as `T`.
pub fn read_file<T: TextFormat>(path: &std::path::Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| perr(0, format!("{}: {e}", path.display())))?;
    T::from_text(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autograde::autos_from_grading;
    use crate::corresp::{qtorus, realize};

    #[test]
    fn algebra_round_trip() {
        let z3 = CycloNumber::root_of_unity(3);
        let a = FinGradedAlgebra::power_norm_residue(3, 1, &z3, &CycloNumber::from_fraction(2, 3)).unwrap();
        let text = a.to_text();
        assert!(text.starts_with("multiloop-format 1 algebra"));
        let back = FinGradedAlgebra::from_text(&text).unwrap();
        assert_eq!(back, a);
        assert_eq!(back.unit_hint(), a.unit_hint());
    }

    #[test]
    fn presentation_and_certificate_round_trip() {
        let b = qtorus(2, 1).unwrap().regrade(&IntMatrix::from_i64(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(GammaFiniteAlgebra::from_text(&b.to_text()).unwrap(), b);
        let cert = realize(&b).unwrap();
        assert_eq!(RealizationCertificate::from_text(&cert.to_text()).unwrap(), cert);
        let s = autos_from_grading(&cert.a, &cert.m).unwrap();
        assert_eq!(AutomorphismSystem::from_text(&s.to_text()).unwrap(), s);
        let m = IntMatrix::from_i64(&[&[2, 1], &[3, 2]]);
        assert_eq!(IntMatrix::from_text(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(FinGradedAlgebra::from_text(""), Err(Error::Parse { .. })));
        assert!(matches!(FinGradedAlgebra::from_text("multiloop-format 2 algebra\n"), Err(Error::Parse { line: 1, .. })));
        let bad = "multiloop-format 1 algebra\ngroup 2\ndim 2\ndegree 1 1\nproduct 1 1 1 1\n";
        assert!(FinGradedAlgebra::from_text(bad).is_err());
        let unbalanced = "multiloop-format 1 autos\nm 2\nbegin algebra base\n";
        assert!(AutomorphismSystem::from_text(unbalanced).is_err());
        let scalar = "multiloop-format 1 algebra\ngroup\ndim 1\nproduct 0 0 0 zeta(4)^2\n";
        let a = FinGradedAlgebra::from_text(scalar).unwrap();
        assert_eq!(a.sc(0, 0, 0), &CycloNumber::from_int(-1));
    }
}
