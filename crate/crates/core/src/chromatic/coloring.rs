use crate::error::{Error, Result};
use crate::graph::Graph;

/// Total vertex coloring with 0-based colors drawn from `0..palette_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    palette_size: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, palette_size: usize) -> Result<Self> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= palette_size)
        {
            return Err(Error::ColorOutOfPalette {
                vertex,
                color,
                palette: palette_size,
            });
        }
        Ok(Self {
            colors,
            palette_size,
        })
    }

    /// Palette is one past the largest color used.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let palette_size = colors.iter().max().map_or(0, |&m| m + 1);
        Self {
            colors,
            palette_size,
        }
    }

    /// Ingests 1-based colors, as the constructions write them.
    pub fn from_one_based(colors: &[usize], palette_size: usize) -> Result<Self> {
        let zero_based = colors
            .iter()
            .enumerate()
            .map(|(vertex, &c)| {
                c.checked_sub(1).ok_or(Error::ColorOutOfPalette {
                    vertex,
                    color: c,
                    palette: palette_size,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(zero_based, palette_size)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.colors.iter().map(|c| c + 1).collect()
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette_size];
        for &c in &self.colors {
            seen[c] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// Relabels colors to `0..colors_used()`, keeping their relative order.
    pub fn compressed(&self) -> Coloring {
        let mut map = vec![usize::MAX; self.palette_size];
        for &c in &self.colors {
            map[c] = 0;
        }
        let mut next = 0;
        for slot in map.iter_mut().filter(|s| **s == 0) {
            *slot = next;
            next += 1;
        }
        Coloring {
            colors: self.colors.iter().map(|&c| map[c]).collect(),
            palette_size: next,
        }
    }

    /// First monochromatic edge in lexicographic order, if any.
    pub fn conflict(&self, g: &Graph) -> Result<Option<(usize, usize)>> {
        if self.colors.len() != g.n() {
            return Err(Error::PartialColoring {
                colored: self.colors.len(),
                n: g.n(),
            });
        }
        Ok(g.edges().find(|&(u, v)| self.colors[u] == self.colors[v]))
    }

    pub fn is_proper(&self, g: &Graph) -> Result<bool> {
        Ok(self.conflict(g)?.is_none())
    }
}

/// True when no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.is_proper(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_colorings() {
        let k3 = Graph::complete(3);
        assert!(is_proper(&k3, &Coloring::new(vec![0, 1, 2], 3).unwrap()).unwrap());
        let bad = Coloring::new(vec![0, 1, 1], 3).unwrap();
        assert!(!is_proper(&k3, &bad).unwrap());
        assert_eq!(bad.conflict(&k3).unwrap(), Some((1, 2)));
    }

    #[test]
    fn partial_coloring_is_an_error() {
        let c = Coloring::new(vec![0, 1], 2).unwrap();
        assert!(matches!(
            is_proper(&Graph::complete(3), &c),
            Err(Error::PartialColoring { colored: 2, n: 3 })
        ));
    }

    #[test]
    fn palette_is_enforced() {
        assert!(Coloring::new(vec![0, 3], 3).is_err());
        assert!(Coloring::from_one_based(&[1, 0], 2).is_err());
        let c = Coloring::from_one_based(&[1, 3, 2], 3).unwrap();
        assert_eq!(c.colors(), &[0, 2, 1]);
        assert_eq!(c.one_based(), vec![1, 3, 2]);
    }

    #[test]
    fn compression_keeps_order() {
        let c = Coloring::new(vec![5, 2, 5, 9], 10).unwrap();
        assert_eq!(c.colors_used(), 3);
        let d = c.compressed();
        assert_eq!(d.colors(), &[1, 0, 1, 2]);
        assert_eq!(d.palette_size(), 3);
    }
}
