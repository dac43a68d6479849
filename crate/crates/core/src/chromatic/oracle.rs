//! Plain exhaustive chromatic number for small graphs: tries k = 1, 2, … and
//! enumerates color assignments in vertex order. Shares no code with the
//! main solver.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_VERTICES: usize = 12;

fn extend(g: &Graph, k: usize, colors: &mut Vec<usize>) -> bool {
    let v = colors.len();
    if v == g.n() {
        return true;
    }
    for c in 0..k {
        if (0..v).all(|u| !(g.has_edge(u, v) && colors[u] == c)) {
            colors.push(c);
            if extend(g, k, colors) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

pub fn oracle_chromatic(g: &Graph) -> Result<usize> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(Error::OracleTooLarge {
            n: g.n(),
            limit: ORACLE_MAX_VERTICES,
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    Ok((1..=g.n())
        .find(|&k| extend(g, k, &mut Vec::with_capacity(g.n())))
        .expect("n colors always suffice"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, star};
    use crate::graph::cartesian_product;

    #[test]
    fn oracle_examples() {
        let (c4, _) = cartesian_product(&[&path(2), &path(2)]).unwrap();
        assert_eq!(oracle_chromatic(&c4).unwrap(), 2);
        assert_eq!(oracle_chromatic(&star(3).delta_complement()).unwrap(), 4);
        assert_eq!(oracle_chromatic(&path(5).delta_complement()).unwrap(), 2);
        assert_eq!(oracle_chromatic(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn oracle_refuses_large_graphs() {
        assert!(matches!(
            oracle_chromatic(&path(13)),
            Err(Error::OracleTooLarge { n: 13, limit: 12 })
        ));
    }
}
