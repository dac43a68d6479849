//! Named graph families and the small term language used to describe them.
//!
//! Canonical labelings (all 0-based):
//! - `P n`: path `0-1-…-(n-1)`
//! - `C n`: cycle `0-1-…-(n-1)-0`
//! - `S1,n`: star with hub `0` and pendants `1..=n`
//! - `W n`: wheel `K_1 ∨ C_n`, hub `0`, rim `1..=n` in cyclic order
//! - `M m,n`: windmill `K_1 ∨ mK_n`, hub `0`, then the blades in blocks of `n`
//! - `J(A,B)`: join, `A` first then `B` shifted by `|A|`
//! - `X(A,B,…)`: Cartesian product under [`ProductIndex`](crate::graph::ProductIndex)
//!
//! Text grammar:
//!
//! ```text
//! spec := 'P' int | 'C' int | 'K' int | 'N' int | 'S' '1' ',' int | 'W' int
//!       | 'M' int ',' int | 'J' '(' spec ',' spec ')' | 'X' '(' spec (',' spec)* ')'
//!       | '@' path-to-json-file
//! ```

use std::fmt;
use std::path::Path;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, Graph, GraphBuilder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// Star with the given number of pendants.
    Star(usize),
    /// Wheel with the given rim length.
    Wheel(usize),
    Windmill {
        blades: usize,
        blade_size: usize,
    },
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Product(Vec<FamilySpec>),
    /// A graph loaded from a JSON file.
    Raw {
        source: String,
        graph: Graph,
    },
}

impl FamilySpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { src: text, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Empty(n) if n == 0 => {
                bad(format!("{self} needs at least one vertex"))
            }
            FamilySpec::Cycle(n) if n < 3 => {
                bad(format!("cycle needs at least 3 vertices, got {n}"))
            }
            FamilySpec::Star(n) if n < 1 => bad("star needs at least one pendant".into()),
            FamilySpec::Wheel(n) if n < 3 => {
                bad(format!("wheel rim needs at least 3 vertices, got {n}"))
            }
            FamilySpec::Windmill { blades, blade_size } if blades < 1 || blade_size < 1 => bad(
                format!("windmill needs positive parameters, got {blades},{blade_size}"),
            ),
            FamilySpec::Join(ref a, ref b) => {
                a.validate()?;
                b.validate()
            }
            FamilySpec::Product(ref fs) => {
                if fs.is_empty() {
                    return bad("product needs at least one factor".into());
                }
                fs.iter().try_for_each(FamilySpec::validate)
            }
            _ => Ok(()),
        }
    }

    /// Factors of a product spec, or the spec itself as a single factor.
    pub fn factors(&self) -> Vec<&FamilySpec> {
        match self {
            FamilySpec::Product(fs) => fs.iter().collect(),
            other => vec![other],
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::Empty(n) => write!(f, "N{n}"),
            FamilySpec::Star(n) => write!(f, "S1,{n}"),
            FamilySpec::Wheel(n) => write!(f, "W{n}"),
            FamilySpec::Windmill { blades, blade_size } => write!(f, "M{blades},{blade_size}"),
            FamilySpec::Join(a, b) => write!(f, "J({a},{b})"),
            FamilySpec::Product(fs) => {
                write!(f, "X(")?;
                for (i, s) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
            FamilySpec::Raw { source, .. } => write!(f, "@{source}"),
        }
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilySpec::parse(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            input: self.src.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected integer"));
        }
        let v = rest[..len]
            .parse()
            .map_err(|_| self.err("integer too large"))?;
        self.pos += len;
        Ok(v)
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let head = self
            .peek()
            .ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += head.len_utf8();
        let spec = match head {
            'P' => FamilySpec::Path(self.int()?),
            'C' => FamilySpec::Cycle(self.int()?),
            'K' => FamilySpec::Complete(self.int()?),
            'N' => FamilySpec::Empty(self.int()?),
            'W' => FamilySpec::Wheel(self.int()?),
            'S' => {
                let at = self.pos;
                if self.int()? != 1 {
                    self.pos = at;
                    return Err(self.err("star is written S1,n"));
                }
                self.expect(',')?;
                FamilySpec::Star(self.int()?)
            }
            'M' => {
                let blades = self.int()?;
                self.expect(',')?;
                FamilySpec::Windmill {
                    blades,
                    blade_size: self.int()?,
                }
            }
            'J' => {
                self.expect('(')?;
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                self.expect(')')?;
                FamilySpec::Join(Box::new(a), Box::new(b))
            }
            'X' => {
                self.expect('(')?;
                let mut fs = vec![self.spec()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    fs.push(self.spec()?);
                }
                self.expect(')')?;
                FamilySpec::Product(fs)
            }
            '@' => {
                let rest = &self.src[self.pos..];
                let source = rest.trim_end().to_string();
                self.pos = self.src.len();
                let text = std::fs::read_to_string(Path::new(&source))?;
                FamilySpec::Raw {
                    graph: crate::io::from_json(&text)?,
                    source,
                }
            }
            _ => {
                self.pos -= head.len_utf8();
                return Err(self.err("unknown family letter"));
            }
        };
        Ok(spec)
    }
}

pub fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for i in 1..n {
        b.add_edge_unchecked(i - 1, i);
    }
    b.build()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        b.add_edge_unchecked(i, (i + 1) % n);
    }
    b.build()
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n)
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

/// `S_{1,n}`: hub 0 joined to pendants `1..=n`.
pub fn star(n: usize) -> Graph {
    join(&Graph::empty(1), &Graph::empty(n))
}

/// `W_n = K_1 ∨ C_n`.
pub fn wheel(n: usize) -> Graph {
    join(&Graph::empty(1), &cycle(n))
}

/// `K_1 ∨ mK_n`.
pub fn windmill(blades: usize, blade_size: usize) -> Graph {
    let blade = Graph::complete(blade_size);
    let copies: Vec<&Graph> = (0..blades).map(|_| &blade).collect();
    join(&Graph::empty(1), &Graph::disjoint_union(&copies))
}

/// Disjoint union of `g` and `h` (h shifted by `g.n()`) plus every cross edge.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut b = GraphBuilder::new(off + h.n());
    for (u, v) in g.edges() {
        b.add_edge_unchecked(u, v);
    }
    for (u, v) in h.edges() {
        b.add_edge_unchecked(off + u, off + v);
    }
    for u in 0..off {
        for v in 0..h.n() {
            b.add_edge_unchecked(u, off + v);
        }
    }
    b.build()
}

/// The common degree if `g` is regular.
pub fn is_regular(g: &Graph) -> Result<Option<usize>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let degrees = g.degrees();
    let d = degrees[0];
    Ok(degrees.iter().all(|&x| x == d).then_some(d))
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Path(n) => path(*n),
        FamilySpec::Cycle(n) => cycle(*n),
        FamilySpec::Complete(n) => complete(*n),
        FamilySpec::Empty(n) => empty(*n),
        FamilySpec::Star(n) => star(*n),
        FamilySpec::Wheel(n) => wheel(*n),
        FamilySpec::Windmill { blades, blade_size } => windmill(*blades, *blade_size),
        FamilySpec::Join(a, b) => join(&generate(a)?, &generate(b)?),
        FamilySpec::Product(fs) => {
            let gs = fs.iter().map(generate).collect::<Result<Vec<_>>>()?;
            let refs: Vec<&Graph> = gs.iter().collect();
            cartesian_product(&refs)?.0
        }
        FamilySpec::Raw { graph, .. } => graph.clone(),
    })
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge_unchecked(u, v);
            }
        }
    }
    b.build()
}

/// Samples `G(n, p)` until the result is connected.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let g = random_graph(n, p, rng);
        if is_connected(&g) {
            return g;
        }
    }
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v).iter() {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::to_json;

    fn gen(s: &str) -> Graph {
        generate(&FamilySpec::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn star_labeling() {
        let g = gen("S1,3");
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn wheel_counts() {
        let g = gen("W5");
        assert_eq!((g.n(), g.edge_count()), (6, 10));
        assert_eq!(gen("J(K1,C5)"), g);
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&empty(1), &empty(4)), star(4));
        assert_eq!(join(&empty(1), &empty(1)), complete(2));
        // K_{2,2} under the join labeling is the cycle 0-2-1-3-0
        let c4 = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(join(&empty(2), &empty(2)), c4);
    }

    #[test]
    fn regularity() {
        assert_eq!(is_regular(&cycle(7)).unwrap(), Some(2));
        assert_eq!(is_regular(&star(3)).unwrap(), None);
        assert_eq!(is_regular(&complete(5)).unwrap(), Some(4));
        assert!(matches!(is_regular(&empty(0)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn closed_form_sizes() {
        for n in 3..10 {
            assert_eq!(path(n).edge_count(), n - 1);
            assert_eq!(cycle(n).edge_count(), n);
            assert_eq!(star(n).edge_count(), n);
            assert_eq!(wheel(n).edge_count(), 2 * n);
        }
        let w = windmill(3, 4);
        assert_eq!(w.n(), 13);
        assert_eq!(w.edge_count(), 3 * 6 + 12);
    }

    #[test]
    fn invalid_parameters() {
        for s in ["C2", "W2", "P0", "S1,0", "M0,3"] {
            let spec = FamilySpec::parse(s).unwrap();
            assert!(
                matches!(generate(&spec), Err(Error::InvalidFamily(_))),
                "{s}"
            );
        }
    }

    #[test]
    fn parse_errors() {
        for s in [
            "",
            "Q3",
            "P",
            "S2,3",
            "X()",
            "X(P3",
            "J(P3)",
            "P3 P4",
            "C99999999999999999999999",
        ] {
            assert!(
                matches!(FamilySpec::parse(s), Err(Error::Parse { .. })),
                "{s:?}"
            );
        }
    }

    #[test]
    fn parse_nested_product() {
        let s = FamilySpec::parse(" X( S1,3 , P3 ) ").unwrap();
        assert_eq!(
            s,
            FamilySpec::Product(vec![FamilySpec::Star(3), FamilySpec::Path(3)])
        );
        assert_eq!(s.to_string(), "X(S1,3,P3)");
    }

    #[test]
    fn deterministic_export() {
        assert_eq!(to_json(&gen("X(C5,P3)")), to_json(&gen("X(C5,P3)")));
    }

    #[test]
    fn raw_spec_loads_json() {
        let dir = std::env::temp_dir().join(format!("dc-raw-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join("g.json");
        std::fs::write(&file, r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        let spec = FamilySpec::parse(&format!("@{}", file.display())).unwrap();
        assert_eq!(generate(&spec).unwrap(), path(3));
        std::fs::remove_dir_all(dir).unwrap();
    }
}
