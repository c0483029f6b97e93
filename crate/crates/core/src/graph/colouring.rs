use alloc::collections::BTreeMap;

use super::{Edge, Graph, GraphBuilder, HamiltonCycle, Vertex};
use crate::{Error, Result};

/// Colours are numbered `1..=r`.
pub type Colour = usize;

/// Map from normalized edges to colours in `1..=r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    r: Colour,
    colours: BTreeMap<Edge, Colour>,
}

impl EdgeColouring {
    pub fn new(r: Colour) -> EdgeColouring {
        EdgeColouring { r, colours: BTreeMap::new() }
    }

    /// Colours every edge of `g` with `f(edge)`.
    pub fn from_fn(g: &Graph, r: Colour, mut f: impl FnMut(Edge) -> Colour) -> Result<EdgeColouring> {
        let mut c = EdgeColouring::new(r);
        for e in g.edges() {
            c.set(e, f(e))?;
        }
        Ok(c)
    }

    pub fn monochromatic(g: &Graph) -> EdgeColouring {
        EdgeColouring::from_fn(g, 1, |_| 1).expect("colour 1 is in range")
    }

    pub fn r(&self) -> Colour {
        self.r
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn set(&mut self, e: Edge, colour: Colour) -> Result<()> {
        if colour == 0 || colour > self.r {
            return Err(Error::ColourOutOfRange { colour, r: self.r });
        }
        self.colours.insert(e, colour);
        Ok(())
    }

    pub fn colour_of(&self, u: Vertex, v: Vertex) -> Option<Colour> {
        self.colours.get(&Edge::new(u, v)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Colour)> + '_ {
        self.colours.iter().map(|(&e, &c)| (e, c))
    }

    /// Checks that exactly the edges of `g` are coloured.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        for e in g.edges() {
            if !self.colours.contains_key(&e) {
                return Err(Error::Uncoloured(e.u(), e.v()));
            }
        }
        if self.colours.len() != g.edge_count() {
            let stray = self.colours.keys().find(|e| !g.has_edge(e.u(), e.v())).unwrap();
            return Err(Error::MissingEdge(stray.u(), stray.v()));
        }
        Ok(())
    }

    /// Colouring restricted to the edges of `g`; every such edge must be coloured.
    pub fn restrict(&self, g: &Graph) -> Result<EdgeColouring> {
        let mut out = EdgeColouring::new(self.r);
        for e in g.edges() {
            let c = self.colour_of(e.u(), e.v()).ok_or(Error::Uncoloured(e.u(), e.v()))?;
            out.colours.insert(e, c);
        }
        Ok(out)
    }
}

/// Spanning subgraph of `g` whose edges are the colour-`i` edges.
pub fn colour_class(g: &Graph, c: &EdgeColouring, i: Colour) -> Result<Graph> {
    if i == 0 || i > c.r() {
        return Err(Error::ColourOutOfRange { colour: i, r: c.r() });
    }
    let mut b = GraphBuilder::new(g.n());
    for e in g.edges() {
        match c.colour_of(e.u(), e.v()) {
            Some(col) if col == i => b.push_unchecked(e.u(), e.v()),
            Some(_) => {}
            None => return Err(Error::Uncoloured(e.u(), e.v())),
        }
    }
    Ok(b.build())
}

/// Number of cycle edges of each colour `1..=r` (colours absent from the cycle map to 0).
pub fn colour_count_in_cycle(cyc: &HamiltonCycle, c: &EdgeColouring) -> Result<BTreeMap<Colour, usize>> {
    let mut counts: BTreeMap<Colour, usize> = (1..=c.r()).map(|i| (i, 0)).collect();
    for e in cyc.edges() {
        let col = c.colour_of(e.u(), e.v()).ok_or(Error::Uncoloured(e.u(), e.v()))?;
        *counts.entry(col).or_insert(0) += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn class_of_single_colour() {
        let g = Graph::complete(3);
        let c = EdgeColouring::monochromatic(&g);
        assert_eq!(colour_class(&g, &c, 1).unwrap(), g);
    }

    #[test]
    fn class_absent_colour_is_empty() {
        let g = Graph::complete(3);
        let c = EdgeColouring::from_fn(&g, 2, |_| 1).unwrap();
        let h = colour_class(&g, &c, 2).unwrap();
        assert_eq!((h.n(), h.edge_count()), (3, 0));
        assert!(colour_class(&g, &c, 3).is_err());
    }

    #[test]
    fn monochromatic_c5() {
        let g = Graph::cycle(5);
        let c = EdgeColouring::monochromatic(&g);
        let cyc = HamiltonCycle::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let counts = colour_count_in_cycle(&cyc, &c).unwrap();
        assert_eq!(counts.into_iter().collect::<alloc::vec::Vec<_>>(), [(1, 5)]);
    }

    #[test]
    fn alternating_c4() {
        let g = Graph::cycle(4);
        let c = EdgeColouring::from_fn(&g, 2, |e| match (e.u(), e.v()) {
            (0, 1) | (2, 3) => 1,
            _ => 2,
        })
        .unwrap();
        let cyc = HamiltonCycle::new(&g, vec![0, 1, 2, 3]).unwrap();
        let counts = colour_count_in_cycle(&cyc, &c).unwrap();
        assert_eq!(counts[&1], 2);
        assert_eq!(counts[&2], 2);
    }

    #[test]
    fn totality_check() {
        let g = Graph::path(3);
        let mut c = EdgeColouring::new(2);
        c.set(Edge::new(0, 1), 1).unwrap();
        assert_eq!(c.check_total(&g), Err(Error::Uncoloured(1, 2)));
        c.set(Edge::new(1, 2), 2).unwrap();
        assert!(c.check_total(&g).is_ok());
        assert!(c.set(Edge::new(0, 2), 3).is_err());
    }
}
