//! Finite acyclic quivers, paths, the Euler form and root tests.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path, as the list of arrow indices traversed in order. The trivial path at a
/// vertex is the empty list.
pub type Path = Vec<usize>;

/// A finite connected quiver without oriented cycles. Vertices keep file order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    name: String,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// Classification of a dimension vector against the root system of the quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootType {
    RealRoot,
    ImaginaryRoot,
    NotARoot,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootType::RealRoot => "real_root",
            RootType::ImaginaryRoot => "imaginary_root",
            RootType::NotARoot => "not_a_root",
        })
    }
}

impl Quiver {
    /// Builds and validates a quiver from vertex ids and `(id, source, target)` triples.
    pub fn new<S: AsRef<str>>(name: &str, vertices: &[S], arrows: &[(S, S, S)]) -> Result<Quiver> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateId(v.clone()));
            }
        }
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let lookup = |v: &str| index.get(v).copied().ok_or_else(|| Error::UnknownVertex(v.to_string()));
        let mut names = HashSet::new();
        let mut out = Vec::new();
        for (id, s, t) in arrows {
            let id = id.as_ref();
            if !names.insert(id.to_string()) {
                return Err(Error::DuplicateId(id.to_string()));
            }
            out.push(Arrow { name: id.to_string(), source: lookup(s.as_ref())?, target: lookup(t.as_ref())? });
        }
        let q = Quiver { name: name.to_string(), vertices, arrows: out };
        q.validate()?;
        Ok(q)
    }

    /// Checks acyclicity and connectedness.
    pub fn validate(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::Disconnected("<none>".into()));
        }
        // Kahn's algorithm; whatever is left over lies on or behind a cycle
        let mut indeg = vec![0usize; self.n_vertices()];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.n_vertices()).filter(|&v| indeg[v] == 0).collect();
        let mut done = 0;
        while let Some(v) = queue.pop_front() {
            done += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    queue.push_back(a.target);
                }
            }
        }
        if done < self.n_vertices() {
            let v = (0..self.n_vertices()).find(|&v| indeg[v] > 0).expect("leftover vertex");
            return Err(Error::CyclicQuiver(self.vertices[v].clone()));
        }
        let comp = self.component(&(0..self.n_vertices()).collect::<Vec<_>>(), 0);
        if let Some(v) = (0..self.n_vertices()).find(|v| !comp.contains(v)) {
            return Err(Error::Disconnected(self.vertices[v].clone()));
        }
        Ok(())
    }

    /// Vertices of `within` reachable from `start` ignoring orientation.
    fn component(&self, within: &[usize], start: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && within.contains(&y) && seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
        }
        seen
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == id).ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, id: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.name == id).ok_or_else(|| Error::UnknownArrow(id.to_string()))
    }

    /// No arrow ends here.
    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.target != v)
    }

    /// No arrow starts here.
    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.source != v)
    }

    /// The quiver with every arrow reversed; taking it twice gives back an equal quiver.
    pub fn opposite(&self) -> Quiver {
        let name = match self.name.strip_suffix("_op") {
            Some(base) => base.to_string(),
            None => format!("{}_op", self.name),
        };
        Quiver {
            name,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// For every vertex `j`, the paths from `y` to `j`, sorted by their arrow-id sequences.
    pub fn paths_from(&self, y: usize) -> Vec<Vec<Path>> {
        let mut out = vec![Vec::new(); self.n_vertices()];
        let mut stack: Vec<(usize, Path)> = vec![(y, Vec::new())];
        while let Some((v, p)) = stack.pop() {
            for (i, a) in self.arrows.iter().enumerate() {
                if a.source == v {
                    let mut q = p.clone();
                    q.push(i);
                    stack.push((a.target, q));
                }
            }
            out[v].push(p);
        }
        for paths in &mut out {
            paths.sort_by(|a, b| self.path_key(a).cmp(&self.path_key(b)));
        }
        out
    }

    /// For every vertex `j`, the paths from `j` to `y`, sorted by their arrow-id sequences.
    pub fn paths_to(&self, y: usize) -> Vec<Vec<Path>> {
        let mut out = self.opposite().paths_from(y);
        for paths in &mut out {
            for p in paths.iter_mut() {
                p.reverse();
            }
            paths.sort_by(|a, b| self.path_key(a).cmp(&self.path_key(b)));
        }
        out
    }

    fn path_key<'a>(&'a self, p: &Path) -> Vec<&'a str> {
        p.iter().map(|&a| self.arrows[a].name.as_str()).collect()
    }

    /// Length of the longest path ending in `y`.
    pub fn longest_path_to(&self, y: usize) -> usize {
        self.paths_to(y).iter().flatten().map(|p| p.len()).max().unwrap_or(0)
    }

    /// `⟨d, e⟩ = Σ d_i e_i − Σ_{α: i→j} d_i e_j`.
    pub fn euler_form(&self, d: &[i64], e: &[i64]) -> i64 {
        assert_eq!(d.len(), self.n_vertices());
        assert_eq!(e.len(), self.n_vertices());
        let diag: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|a| d[a.source] * e[a.target]).sum();
        diag - off
    }

    /// The Tits form `q(d) = ⟨d, d⟩`.
    pub fn tits_form(&self, d: &[i64]) -> i64 {
        self.euler_form(d, d)
    }

    /// `(d, e_i) = ⟨d, e_i⟩ + ⟨e_i, d⟩`.
    fn symmetric_with_simple(&self, d: &[i64], i: usize) -> i64 {
        let mut s = 2 * d[i];
        for a in &self.arrows {
            if a.source == i {
                s -= d[a.target];
            }
            if a.target == i {
                s -= d[a.source];
            }
        }
        s
    }

    fn support_connected(&self, d: &[i64]) -> bool {
        let support: Vec<usize> = (0..d.len()).filter(|&i| d[i] != 0).collect();
        match support.first() {
            Some(&s) => self.component(&support, s).len() == support.len(),
            None => false,
        }
    }

    /// Classifies a nonzero nonnegative vector by reflecting it down: a vector that
    /// reaches a simple root is a real root, one that reaches the fundamental set
    /// (connected support, `(d, e_i) ≤ 0` for all `i`) is an imaginary root, and one
    /// that leaves the positive cone or loses connectedness is not a root.
    pub fn root_type(&self, d: &[i64]) -> Result<RootType> {
        if d.len() != self.n_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "dimension vector has {} entries, quiver has {} vertices",
                d.len(),
                self.n_vertices()
            )));
        }
        if d.iter().any(|&x| x < 0) {
            return Err(Error::NegativeVector);
        }
        if d.iter().all(|&x| x == 0) {
            return Err(Error::ZeroVector);
        }
        let mut d = d.to_vec();
        loop {
            if d.iter().any(|&x| x < 0) || !self.support_connected(&d) {
                return Ok(RootType::NotARoot);
            }
            if d.iter().sum::<i64>() == 1 {
                return Ok(RootType::RealRoot);
            }
            match (0..d.len()).find(|&i| self.symmetric_with_simple(&d, i) > 0) {
                Some(i) => d[i] -= self.symmetric_with_simple(&d, i),
                None => return Ok(RootType::ImaginaryRoot),
            }
        }
    }

    /// True when the symmetrized Tits form is positive definite, i.e. the underlying
    /// graph is of Dynkin type.
    pub fn is_dynkin(&self) -> bool {
        let n = self.n_vertices();
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v: i64 = if i == j { 2 } else { 0 };
                        for a in &self.arrows {
                            if (a.source, a.target) == (i, j) || (a.source, a.target) == (j, i) {
                                v -= 1;
                            }
                        }
                        BigRational::from_integer(v.into())
                    })
                    .collect()
            })
            .collect();
        // positive definite iff elimination without pivoting meets only positive pivots
        for k in 0..n {
            if !m[k][k].is_positive() {
                return false;
            }
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let t = &m[i][k] / &m[k][k];
                for j in k..n {
                    let v = &t * &m[k][j];
                    m[i][j] -= v;
                }
            }
        }
        true
    }

    /// All positive roots of a Dynkin quiver, found by closing the simple roots
    /// under simple reflections. Sorted lexicographically.
    pub fn positive_roots(&self) -> Result<Vec<Vec<i64>>> {
        if !self.is_dynkin() {
            return Err(Error::NotRepresentationFinite(self.name.clone()));
        }
        let n = self.n_vertices();
        let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            found.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(d) = queue.pop_front() {
            for i in 0..n {
                let c = self.symmetric_with_simple(&d, i);
                let mut r = d.clone();
                r[i] -= c;
                if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && found.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    /// Canonical text form.
    pub fn to_text(&self) -> String {
        let mut s = format!("quiver {}\nvertices {}\n", self.name, self.vertices.join(" "));
        for a in &self.arrows {
            s.push_str(&format!("arrow {} {} {}\n", a.name, self.vertices[a.source], self.vertices[a.target]));
        }
        s
    }

    /// Parses numbered, comment-stripped, non-empty lines.
    pub(crate) fn parse_lines(lines: &[(usize, &str)]) -> Result<Quiver> {
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let mut it = lines.iter();
        let &(l1, first) = it.next().ok_or_else(|| parse_err(1, "expected `quiver <name>`".into()))?;
        let name = match first.split_whitespace().collect::<Vec<_>>()[..] {
            ["quiver", name] => name.to_string(),
            _ => return Err(parse_err(l1, "expected `quiver <name>`".into())),
        };
        let &(l2, second) = it.next().ok_or_else(|| parse_err(l1 + 1, "expected `vertices ...`".into()))?;
        let mut words = second.split_whitespace();
        if words.next() != Some("vertices") {
            return Err(parse_err(l2, "expected `vertices <id> ...`".into()));
        }
        let vertices: Vec<&str> = words.collect();
        let mut arrows = Vec::new();
        for &(ln, line) in it {
            match line.split_whitespace().collect::<Vec<_>>()[..] {
                ["arrow", id, s, t] => arrows.push((id, s, t)),
                _ => return Err(parse_err(ln, format!("expected `arrow <id> <source> <target>`, found `{line}`"))),
            }
        }
        Quiver::new(&name, &vertices, &arrows)
    }
}

/// Numbered lines with `#` comments and blank lines removed.
pub(crate) fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

impl FromStr for Quiver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quiver::parse_lines(&content_lines(s))
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Standard quivers used in examples and tests.
pub mod catalog {
    use super::Quiver;

    /// `1 → 2`.
    pub fn a2() -> Quiver {
        Quiver::new("A2", &["1", "2"], &[("a", "1", "2")]).expect("valid quiver")
    }

    /// `1 → 2 → 3`.
    pub fn a3() -> Quiver {
        Quiver::new("A3", &["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).expect("valid quiver")
    }

    /// `1 → 2 ← 3`.
    pub fn a3_two_sources() -> Quiver {
        Quiver::new("A3s", &["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")]).expect("valid quiver")
    }

    /// Three arrows into a central sink `0`.
    pub fn d4() -> Quiver {
        Quiver::new("D4", &["0", "1", "2", "3"], &[("a", "1", "0"), ("b", "2", "0"), ("c", "3", "0")])
            .expect("valid quiver")
    }

    /// Two arrows `2 ⇉ 1`.
    pub fn kronecker() -> Quiver {
        Quiver::new("Kronecker", &["1", "2"], &[("x", "2", "1"), ("y", "2", "1")]).expect("valid quiver")
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn validation() {
        assert!(Quiver::new("A2", &["1", "2"], &[("a", "1", "2")]).is_ok());
        assert_eq!(Quiver::new("L", &["1"], &[("l", "1", "1")]), Err(Error::CyclicQuiver("1".into())));
        assert!(Quiver::new("K", &["1", "2"], &[("x", "2", "1"), ("y", "2", "1")]).is_ok());
        assert_eq!(Quiver::new("D", &["1", "2"], &[] as &[(&str, &str, &str)]), Err(Error::Disconnected("2".into())));
        assert_eq!(Quiver::new("D", &["1", "1"], &[] as &[(&str, &str, &str)]), Err(Error::DuplicateId("1".into())));
        assert_eq!(
            Quiver::new("D", &["1", "2"], &[("a", "1", "2"), ("a", "2", "1")]),
            Err(Error::DuplicateId("a".into()))
        );
        assert_eq!(
            Quiver::new("C", &["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "2")]),
            Err(Error::CyclicQuiver("2".into()))
        );
    }

    #[test]
    fn euler_examples() {
        let a2 = a2();
        assert_eq!(a2.euler_form(&[1, 0], &[1, 0]), 1);
        assert_eq!(a2.euler_form(&[1, 0], &[0, 1]), -1);
        assert_eq!(kronecker().euler_form(&[1, 1], &[1, 1]), 0);
    }

    #[test]
    fn root_examples() {
        assert_eq!(a2().root_type(&[1, 1]).unwrap(), RootType::RealRoot);
        assert_eq!(kronecker().root_type(&[1, 1]).unwrap(), RootType::ImaginaryRoot);
        assert_eq!(kronecker().root_type(&[2, 1]).unwrap(), RootType::RealRoot);
        assert_eq!(kronecker().root_type(&[3, 1]).unwrap(), RootType::NotARoot);
        assert_eq!(a2().root_type(&[2, 0]).unwrap(), RootType::NotARoot);
        assert_eq!(a3().root_type(&[1, 0, 1]).unwrap(), RootType::NotARoot);
        assert_eq!(a2().root_type(&[0, 0]), Err(Error::ZeroVector));
    }

    /// Root counts from the reflection closure agree with the descent test and the closed formulas.
    #[test]
    fn real_root_counts() {
        for (q, expected) in [(a2(), 3), (a3(), 6), (a3_two_sources(), 6), (d4(), 12)] {
            let roots = q.positive_roots().unwrap();
            assert_eq!(roots.len(), expected, "{}", q.name());
            let n = q.n_vertices();
            let mut count = 0;
            let bound = 3i64;
            let mut d = vec![0i64; n];
            loop {
                if d.iter().any(|&x| x > 0) && q.root_type(&d).unwrap() == RootType::RealRoot {
                    count += 1;
                    assert!(roots.contains(&d));
                    assert_eq!(q.tits_form(&d), 1);
                }
                let mut i = 0;
                while i < n && d[i] == bound {
                    d[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                d[i] += 1;
            }
            assert_eq!(count, expected);
        }
        assert!(!kronecker().is_dynkin());
        assert!(kronecker().positive_roots().is_err());
    }

    #[test]
    fn paths() {
        let q = a3();
        let from1 = q.paths_from(0);
        assert_eq!(from1.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 1, 1]);
        assert_eq!(from1[2], vec![vec![0, 1]]);
        let to3 = q.paths_to(2);
        assert_eq!(to3[0], vec![vec![0, 1]]);
        assert_eq!(q.longest_path_to(2), 2);
        assert_eq!(kronecker().paths_from(1)[0].len(), 2);
    }

    #[test]
    fn text_roundtrip() {
        let text = "# a comment\nquiver D4\nvertices 0 1 2 3\narrow a 1 0  # trailing\narrow b 2 0\narrow c 3 0\n";
        let q: Quiver = text.parse().unwrap();
        assert_eq!(q, d4());
        assert_eq!(q.to_text().parse::<Quiver>().unwrap().to_text(), q.to_text());
        let bad = "quiver X\nvertices 1 2\narow a 1 2\n";
        assert_eq!(
            bad.parse::<Quiver>().unwrap_err(),
            Error::Parse { line: 3, message: "expected `arrow <id> <source> <target>`, found `arow a 1 2`".into() }
        );
    }

    proptest! {
        #[test]
        fn euler_is_bilinear(d in prop::collection::vec(-5i64..6, 4), e in prop::collection::vec(-5i64..6, 4),
                             g in prop::collection::vec(-5i64..6, 4), s in -3i64..4) {
            let q = d4();
            let de: Vec<i64> = d.iter().zip(&e).map(|(a, b)| a + s * b).collect();
            prop_assert_eq!(q.euler_form(&de, &g), q.euler_form(&d, &g) + s * q.euler_form(&e, &g));
            prop_assert_eq!(q.euler_form(&g, &de), q.euler_form(&g, &d) + s * q.euler_form(&g, &e));
        }
    }
}
