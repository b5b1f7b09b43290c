use std::collections::VecDeque;

use super::FiniteMatrixGroup;

/// Conjugacy classes of a group in the fixed reproducible order: by class
/// size, then order of the representative, then the representative matrix.
/// The representative of each class is its smallest matrix.
#[derive(Debug, Clone)]
pub struct ClassData {
    group_id: u64,
    group_order: usize,
    field_order: u32,
    classes: Vec<Vec<usize>>,
    representatives: Vec<usize>,
    rep_orders: Vec<u32>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
    power_map: Vec<Vec<usize>>,
}

impl ClassData {
    pub fn group_id(&self) -> u64 {
        self.group_id
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.representatives[c]
    }

    pub fn representative_order(&self, c: usize) -> u32 {
        self.rep_orders[c]
    }

    pub fn representative_orders(&self) -> &[u32] {
        &self.rep_orders
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    /// Class of `g^j` for the representative `g` of class `c`.
    pub fn power_class(&self, c: usize, j: u32) -> usize {
        let powers = &self.power_map[c];
        powers[j as usize % powers.len()]
    }
}

pub fn conjugacy_classes(g: &FiniteMatrixGroup) -> ClassData {
    let n = g.len();
    let mut seen = vec![false; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut class = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &s in g.generators() {
                let y = g.conjugate(s, x);
                if !seen[y] {
                    seen[y] = true;
                    class.push(y);
                    queue.push_back(y);
                }
            }
        }
        class.sort_unstable();
        raw.push(class);
    }

    let mut keyed: Vec<(usize, u32, usize, Vec<usize>)> = raw
        .into_iter()
        .map(|class| {
            let rep = *class
                .iter()
                .min_by(|&&a, &&b| g.element(a).cmp(g.element(b)))
                .expect("classes are nonempty");
            (class.len(), g.element_order(rep), rep, class)
        })
        .collect();
    keyed.sort_by(|a, b| {
        (a.0, a.1)
            .cmp(&(b.0, b.1))
            .then_with(|| g.element(a.2).cmp(g.element(b.2)))
    });

    let mut class_of = vec![0; n];
    for (c, (_, _, _, members)) in keyed.iter().enumerate() {
        for &x in members {
            class_of[x] = c;
        }
    }
    let representatives: Vec<usize> = keyed.iter().map(|k| k.2).collect();
    let rep_orders: Vec<u32> = keyed.iter().map(|k| k.1).collect();
    let inverse_class = representatives.iter().map(|&r| class_of[g.inv(r)]).collect();
    let power_map = representatives
        .iter()
        .zip(&rep_orders)
        .map(|(&r, &o)| {
            let mut out = Vec::with_capacity(o as usize);
            let mut x = 0;
            for _ in 0..o {
                out.push(class_of[x]);
                x = g.mul(x, r);
            }
            out
        })
        .collect();

    ClassData {
        group_id: g.id(),
        group_order: n,
        field_order: g.field_order(),
        classes: keyed.into_iter().map(|k| k.3).collect(),
        representatives,
        rep_orders,
        class_of,
        inverse_class,
        power_map,
    }
}

/// `a_ijk = #{(x, y) in C_i x C_j : xy = z}` for a fixed `z` in `C_k`.
pub fn structure_constants(g: &FiniteMatrixGroup, cls: &ClassData, i: usize, j: usize, k: usize) -> u64 {
    structure_constants_at(g, cls, i, j, cls.representative(k))
}

/// Structure constant evaluated at an explicit element `z` of the target class.
pub fn structure_constants_at(g: &FiniteMatrixGroup, cls: &ClassData, i: usize, j: usize, z: usize) -> u64 {
    cls.class(i)
        .iter()
        .filter(|&&x| cls.class_of(g.mul(g.inv(x), z)) == j)
        .count() as u64
}

/// The class-sum matrix `M_i` with `(M_i)_{jk} = a_ijk`.
pub fn class_matrix(g: &FiniteMatrixGroup, cls: &ClassData, i: usize) -> Vec<Vec<u64>> {
    let r = cls.len();
    let mut m = vec![vec![0u64; r]; r];
    for k in 0..r {
        let z = cls.representative(k);
        for &x in cls.class(i) {
            let y = g.mul(g.inv(x), z);
            m[cls.class_of(y)][k] += 1;
        }
    }
    m
}
