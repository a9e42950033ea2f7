use super::{check_bound, OracleConfig};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Connected, pairwise touching vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bramble {
    pub elements: Vec<VertexSet>,
}

fn touch(g: &Graph, x: &VertexSet, y: &VertexSet) -> bool {
    !x.is_disjoint(y)
        || x.iter()
            .any(|&v| g.neighbors(v).iter().any(|w| y.contains(w)))
}

impl Bramble {
    /// Checks that every element is connected and every pair touches.
    pub fn new(g: &Graph, elements: Vec<VertexSet>) -> Result<Self> {
        for (i, e) in elements.iter().enumerate() {
            if let Some(&v) = e.iter().find(|&&v| v >= g.n()) {
                return Err(Error::VertexOutOfRange(v));
            }
            if !g.is_connected_set(e) {
                return Err(Error::InvalidBramble(format!(
                    "element {i} {:?} is empty or disconnected",
                    g.names_of(e)
                )));
            }
        }
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                if !touch(g, &elements[i], &elements[j]) {
                    return Err(Error::InvalidBramble(format!(
                        "elements {i} {:?} and {j} {:?} do not touch",
                        g.names_of(&elements[i]),
                        g.names_of(&elements[j])
                    )));
                }
            }
        }
        Ok(Bramble { elements })
    }

    /// The bramble of all singletons of a clique.
    pub fn singletons(g: &Graph) -> Result<Self> {
        Bramble::new(g, (0..g.n()).map(|v| VertexSet::from([v])).collect())
    }

    fn masks(&self) -> Vec<u32> {
        self.elements
            .iter()
            .map(|e| e.iter().fold(0, |m, &v| m | 1 << v))
            .collect()
    }
}

fn hits_all(masks: &[u32], cover: u32) -> bool {
    masks.iter().all(|&m| m & cover != 0)
}

fn search(masks: &[u32], cover: u32, size: u32, best: &mut (u32, u32)) {
    if size >= best.0 {
        return;
    }
    let Some(&open) = masks.iter().find(|&&m| m & cover == 0) else {
        *best = (size, cover);
        return;
    };
    let mut rest = open;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        search(masks, cover | 1 << v, size + 1, best);
    }
}

/// The order of a bramble: the size of a smallest set meeting every
/// element, with such a set.
pub fn bramble_order(g: &Graph, b: &Bramble, cfg: &OracleConfig) -> Result<(usize, VertexSet)> {
    check_bound("bramble", g.n(), cfg.bramble_max_n.min(30))?;
    let masks = b.masks();
    let mut best = (u32::MAX, 0);
    search(&masks, 0, 0, &mut best);
    let cover = (0..32).filter(|&v| best.1 >> v & 1 == 1).collect();
    Ok((best.0 as usize, cover))
}

fn minimal_covers(masks: &[u32], n: usize) -> Vec<u32> {
    (0u32..1 << n)
        .filter(|&c| {
            hits_all(masks, c) && {
                let mut rest = c;
                let mut minimal = true;
                while rest != 0 && minimal {
                    let v = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    minimal = !hits_all(masks, c & !v);
                }
                minimal
            }
        })
        .collect()
}

/// The least size of `X¹ ∩ … ∩ Xⁱ` over covers `Xʲ` of the `j`-th bramble.
/// Shrinking a cover never grows the intersection, so inclusion-minimal
/// covers suffice.
pub fn bramble_intersection_number(
    g: &Graph,
    brambles: &[Bramble],
    cfg: &OracleConfig,
) -> Result<usize> {
    check_bound("bramble", g.n(), cfg.bramble_max_n.min(24))?;
    if brambles.is_empty() {
        return Err(Error::InvalidParams("no brambles given".into()));
    }
    let covers: Vec<Vec<u32>> = brambles
        .iter()
        .map(|b| minimal_covers(&b.masks(), g.n()))
        .collect();
    fn go(covers: &[Vec<u32>], acc: u32, best: &mut u32) {
        match covers.split_first() {
            None => *best = (*best).min(acc.count_ones()),
            Some((first, rest)) => {
                for &c in first {
                    if *best == 0 {
                        return;
                    }
                    go(rest, acc & c, best);
                }
            }
        }
    }
    let mut best = u32::MAX;
    go(&covers, u32::MAX, &mut best);
    Ok(best as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn cell(g: &Graph, r: usize, c: usize) -> usize {
        g.require(&format!("{r},{c}")).unwrap()
    }

    /// Row `i` together with column `j`, for all `i, j`.
    fn all_crosses(g: &Graph, k: usize) -> Bramble {
        let elements = (1..=k)
            .flat_map(|i| (1..=k).map(move |j| (i, j)))
            .map(|(i, j)| {
                (1..=k)
                    .map(|c| cell(g, i, c))
                    .chain((1..=k).map(|r| cell(g, r, j)))
                    .collect()
            })
            .collect();
        Bramble::new(g, elements).unwrap()
    }

    /// Crosses of the top-left `(k-1) x (k-1)` subgrid, the bottom row
    /// without its last cell, and the last column.
    fn subgrid_crosses(g: &Graph, k: usize) -> Bramble {
        let mut elements: Vec<VertexSet> = (1..k)
            .flat_map(|i| (1..k).map(move |j| (i, j)))
            .map(|(i, j)| {
                (1..k)
                    .map(|c| cell(g, i, c))
                    .chain((1..k).map(|r| cell(g, r, j)))
                    .collect()
            })
            .collect();
        elements.push((1..k).map(|c| cell(g, k, c)).collect());
        elements.push((1..=k).map(|r| cell(g, r, k)).collect());
        Bramble::new(g, elements).unwrap()
    }

    #[test]
    fn singletons_of_a_clique() {
        for n in 1..=6 {
            let g = generate(&Family::Complete(n), 0).unwrap();
            let b = Bramble::singletons(&g).unwrap();
            assert_eq!(bramble_order(&g, &b, &cfg()).unwrap().0, n);
            assert_eq!(
                bramble_intersection_number(&g, std::slice::from_ref(&b), &cfg()).unwrap(),
                n
            );
            assert_eq!(
                bramble_intersection_number(&g, &[b.clone(), b.clone(), b], &cfg()).unwrap(),
                n
            );
        }
    }

    #[test]
    fn grid_crosses() {
        let g = generate(&Family::Grid(3, 3), 0).unwrap();
        // a diagonal meets every row, hence every full cross
        let (order, cover) = bramble_order(&g, &all_crosses(&g, 3), &cfg()).unwrap();
        assert_eq!(order, 3);
        assert_eq!(cover.len(), 3);
        for k in 2..=4 {
            let g = generate(&Family::Grid(k, k), 0).unwrap();
            assert_eq!(
                bramble_order(&g, &subgrid_crosses(&g, k), &cfg())
                    .unwrap()
                    .0,
                k + 1
            );
        }
    }

    #[test]
    fn invalid_brambles() {
        let g = generate(&Family::Path(4), 0).unwrap();
        assert!(Bramble::new(&g, vec![VertexSet::from([0, 2])]).is_err());
        assert!(Bramble::new(&g, vec![VertexSet::from([0]), VertexSet::from([3])]).is_err());
        assert!(Bramble::new(&g, vec![VertexSet::new()]).is_err());
    }

    #[test]
    fn disjoint_covers_give_zero() {
        let g = generate(&Family::Path(2), 0).unwrap();
        let a = Bramble::new(&g, vec![VertexSet::from([0])]).unwrap();
        let b = Bramble::new(&g, vec![VertexSet::from([1])]).unwrap();
        assert_eq!(bramble_intersection_number(&g, &[a, b], &cfg()).unwrap(), 0);
    }
}
