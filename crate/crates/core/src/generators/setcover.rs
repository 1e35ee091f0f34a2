use crate::graph::{Graph, VertexId};
use crate::instance::{Instance, RouteKind};
use crate::oracle::SetCover;
use crate::route::Route;

use super::{add_chain, GenError, GeneratedInstance, NameMap, Orientation};

/// Vertex layout: s = 0, t = 1, element vertices `elem[i]`, set vertices
/// `set[j]`, then the internals of the set chains (length l + 2 from s to
/// each set vertex) and element chains (length l + 1 from s to each element
/// vertex). Element i is joined to set j iff i belongs to set j; every set
/// vertex is joined to t. p = n + m, k = l, kind walk. The undirected
/// orientation adds the length cap l + 3.
pub fn gen_setcover(sc: &SetCover, orientation: Orientation) -> Result<GeneratedInstance, GenError> {
    let (n, m, l) = (sc.universe, sc.family.len(), sc.budget);
    if n + m == 0 {
        return Err(GenError::EmptySetCover);
    }
    let mut g = Graph::new(orientation == Orientation::Directed, 2 + n + m);
    let mut names = NameMap::default();
    names.insert("s", 0);
    names.insert("t", 1);
    for i in 0..n {
        names.insert(format!("elem[{i}]"), elem(i));
    }
    for j in 0..m {
        names.insert(format!("set[{j}]"), set(n, j));
    }
    for j in 0..m {
        add_chain(&mut g, &mut names, &format!("set_chain[{j}]"), 0, set(n, j), l + 2)?;
    }
    for i in 0..n {
        add_chain(&mut g, &mut names, &format!("elem_chain[{i}]"), 0, elem(i), l + 1)?;
    }
    for (j, members) in sc.family.iter().enumerate() {
        for &i in members {
            if i >= n {
                return Err(GenError::VertexOutOfRange(i));
            }
            g.add_edge(elem(i), set(n, j))?;
        }
    }
    for j in 0..m {
        g.add_edge(set(n, j), 1)?;
    }
    let alpha = (orientation == Orientation::Undirected).then_some(l + 3);
    let instance = Instance::new(g, 0, 1, n + m, l, RouteKind::Walk, alpha)?;
    Ok(GeneratedInstance { instance, names })
}

fn elem(i: usize) -> VertexId {
    2 + i
}

fn set(n: usize, j: usize) -> VertexId {
    2 + n + j
}

/// One walk per chain: set walks go straight on to t, element walks through
/// the first set of `cover` that contains them. Routes are listed set walks
/// first, then element walks.
pub fn gen_setcover_witness(gen: &GeneratedInstance, sc: &SetCover, cover: &[usize]) -> Result<Vec<Route>, GenError> {
    let (n, m, l) = (sc.universe, sc.family.len(), sc.budget);
    if cover.len() > l {
        return Err(GenError::InvalidCover(format!("{} sets exceed the budget {l}", cover.len())));
    }
    if let Some(&j) = cover.iter().find(|&&j| j >= m) {
        return Err(GenError::InvalidCover(format!("set {j} does not exist")));
    }
    let names = &gen.names;
    let chain = |label: String, len: usize, end: VertexId| -> Vec<VertexId> {
        let mut vs = vec![0];
        vs.extend((1..len).map(|c| names.get(&format!("{label}.{c}")).expect("chain vertex")));
        vs.push(end);
        vs
    };
    let mut routes = Vec::with_capacity(n + m);
    for j in 0..m {
        let mut vs = chain(format!("set_chain[{j}]"), l + 2, set(n, j));
        vs.push(1);
        routes.push(Route::new(vs));
    }
    for i in 0..n {
        let j = cover
            .iter()
            .copied()
            .find(|&j| sc.family[j].contains(&i))
            .ok_or_else(|| GenError::InvalidCover(format!("element {i} is not covered")))?;
        let mut vs = chain(format!("elem_chain[{i}]"), l + 1, elem(i));
        vs.extend([set(n, j), 1]);
        routes.push(Route::new(vs));
    }
    Ok(routes)
}
