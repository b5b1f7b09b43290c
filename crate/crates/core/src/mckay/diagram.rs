use crate::exact_arith::linalg::IntMatrix;

fn neighbours(m: &IntMatrix, i: usize) -> Vec<usize> {
    (0..m.len()).filter(|&j| j != i && m[i][j] != 0).collect()
}

/// BFS distances from `start`, `None` when unreachable.
fn distances(m: &IntMatrix, start: usize) -> (Vec<Option<usize>>, Vec<usize>) {
    let n = m.len();
    let mut dist = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    dist[start] = Some(0);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for v in neighbours(m, u) {
            if dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    (dist, parent)
}

fn farthest(dist: &[Option<usize>]) -> usize {
    let mut best = 0;
    for (i, d) in dist.iter().enumerate() {
        if d > &dist[best] {
            best = i;
        }
    }
    best
}

fn edge(m: &IntMatrix, a: usize, b: usize) -> Option<String> {
    let (ab, ba) = (-m[a][b], -m[b][a]);
    Some(
        match (ab, ba) {
            (1, 1) => "---",
            (1, 2) => "==>",
            (2, 1) => "<==",
            (1, 3) => "≡≡>",
            (3, 1) => "<≡≡",
            (2, 2) => "<=>",
            _ => return None,
        }
        .to_string(),
    )
}

fn spine_layout(m: &IntMatrix, labels: &[String]) -> Option<String> {
    let n = m.len();
    let edges: usize = (0..n).map(|i| neighbours(m, i).len()).sum::<usize>() / 2;
    let (dist, _) = distances(m, 0);
    if edges + 1 != n || dist.iter().any(Option::is_none) {
        return None;
    }
    let start = farthest(&dist);
    let (dist, parent) = distances(m, start);
    let mut spine = vec![farthest(&dist)];
    while *spine.last().unwrap() != start {
        spine.push(parent[*spine.last().unwrap()]);
    }
    let on_spine: Vec<Option<usize>> = (0..n).map(|i| spine.iter().position(|&s| s == i)).collect();

    // each off-spine node must be a leaf on a simple edge
    let mut above: Vec<Option<usize>> = vec![None; spine.len()];
    let mut below: Vec<Option<usize>> = vec![None; spine.len()];
    for v in (0..n).filter(|&v| on_spine[v].is_none()) {
        let nb = neighbours(m, v);
        let &[u] = nb.as_slice() else { return None };
        let pos = on_spine[u]?;
        if m[u][v] != -1 || m[v][u] != -1 {
            return None;
        }
        if below[pos].is_none() {
            below[pos] = Some(v);
        } else if above[pos].is_none() {
            above[pos] = Some(v);
        } else {
            return None;
        }
    }

    let mut line = String::new();
    let mut centres = Vec::new();
    for (k, &v) in spine.iter().enumerate() {
        if k > 0 {
            line.push_str(&edge(m, spine[k - 1], v)?);
        }
        let token = format!("[{}]", labels[v]);
        centres.push(line.chars().count() + token.chars().count() / 2);
        line.push_str(&token);
    }

    let hanging = |slots: &[Option<usize>]| -> (String, String) {
        let mut bar = String::new();
        let mut names = String::new();
        for (k, slot) in slots.iter().enumerate() {
            let Some(v) = slot else { continue };
            let token = format!("[{}]", labels[*v]);
            let c = centres[k];
            while bar.chars().count() < c {
                bar.push(' ');
            }
            bar.push('|');
            let left = c.saturating_sub(token.chars().count() / 2).max(names.chars().count());
            while names.chars().count() < left {
                names.push(' ');
            }
            names.push_str(&token);
            names.push(' ');
        }
        (bar, names.trim_end().to_string())
    };

    let mut out = Vec::new();
    if above.iter().any(Option::is_some) {
        let (bar, names) = hanging(&above);
        out.push(names);
        out.push(bar);
    }
    out.push(line);
    if below.iter().any(Option::is_some) {
        let (bar, names) = hanging(&below);
        out.push(bar);
        out.push(names);
    }
    Some(out.join("\n") + "\n")
}

fn edge_list(m: &IntMatrix, labels: &[String]) -> String {
    let n = m.len();
    let mut out = String::new();
    for (i, label) in labels.iter().enumerate() {
        out.push_str(&format!("{i}: [{label}]\n"));
    }
    for i in 0..n {
        for j in i + 1..n {
            if m[i][j] != 0 || m[j][i] != 0 {
                out.push_str(&format!("{i} -- {j}  ({}, {})\n", m[i][j], m[j][i]));
            }
        }
    }
    out
}

/// ASCII picture of a Cartan-shaped matrix. Trees are drawn along their
/// longest path with leaves hanging above and below; multiple edges point
/// toward the shorter root (the node `i` with `|M[i][j]| > 1`). Anything
/// else falls back to an edge list.
pub fn render_dynkin(m: &IntMatrix, labels: &[String]) -> String {
    assert_eq!(m.len(), labels.len(), "one label per node");
    if m.is_empty() {
        return String::new();
    }
    spine_layout(m, labels).unwrap_or_else(|| edge_list(m, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mckay::{DynkinType, Family};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn g2_arrow_points_to_short_root() {
        let m = DynkinType::finite(Family::G, 2).matrix().unwrap();
        assert_eq!(render_dynkin(&m, &labels(2)), "[0]≡≡>[1]\n");
    }

    #[test]
    fn b3_chain() {
        let m = DynkinType::finite(Family::B, 3).matrix().unwrap();
        let s = render_dynkin(&m, &labels(3));
        assert!(s == "[0]---[1]==>[2]\n" || s == "[2]<==[1]---[0]\n", "{s}");
    }

    #[test]
    fn e6_has_one_hanging_node() {
        let m = DynkinType::finite(Family::E, 6).matrix().unwrap();
        let s = render_dynkin(&m, &labels(6));
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "[0]---[1]---[2]---[3]---[4]");
        assert_eq!(lines[1], "             |");
        assert_eq!(lines[2], "            [5]");
    }

    #[test]
    fn d4_affine_uses_both_sides() {
        let m = DynkinType::affine(Family::D, 4).matrix().unwrap();
        let s = render_dynkin(&m, &labels(5));
        assert_eq!(s.lines().count(), 5);
    }

    #[test]
    fn cycle_falls_back_to_edges() {
        let m = DynkinType::affine(Family::A, 2).matrix().unwrap();
        let s = render_dynkin(&m, &labels(3));
        assert!(s.contains("0 -- 1"));
        assert!(s.contains("0 -- 2"));
    }
}
