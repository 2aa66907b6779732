//! Wreath decomposition of relative Weyl groups `N_{W^F}(I)` for a
//! `τ`-stable subset `I ⊆ Δ`.
//!
//! `W_I^F` splits into irreducible components `I_j` (unions of `τ`-orbits);
//! `N_{W^F}(I)` permutes them and induces diagram automorphisms, and the
//! kernel of that action is the pointwise centralizer `C` of `I`.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_datum::CartanType;
use crate::weyl::{orbits_of, recognize, Check, Twist, WeylGroup};

#[derive(Clone, Debug, Serialize)]
pub struct LeviComponent {
    /// positions of Δ, sorted
    pub nodes: Vec<usize>,
    /// Cartan type of `Φ_{I_j}`
    pub cartan_type: String,
    /// Coxeter type of `W_{I_j}^F`
    pub fixed_type: String,
    /// order of `τ` on `I_j`
    pub twist: usize,
    /// diagram automorphisms of `I_j` commuting with `τ`
    pub full_autos: usize,
    /// automorphisms of `I_j` induced by its stabilizer in `N_{W^F}(I)`
    pub autos: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeviClass {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub fixed_type: String,
    pub twist: usize,
    pub autos: usize,
    pub full_autos: usize,
    pub n: usize,
    /// indices into `components`
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WreathFactor {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub autos: usize,
    pub n: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeviDecomposition {
    #[serde(rename = "I")]
    pub subset: Vec<usize>,
    pub components: Vec<LeviComponent>,
    pub classes: Vec<LeviClass>,
    pub centralizer_order: usize,
    pub relative_order: usize,
    /// `|N_{W^F}(I) / C|`
    pub image_order: usize,
    pub checks: Vec<Check>,
}

impl LeviDecomposition {
    /// Wreath factors `(type, |A|, n)`, ordered by type label then `n`.
    pub fn wreath_shape(&self) -> Vec<WreathFactor> {
        let mut out: Vec<WreathFactor> = self
            .classes
            .iter()
            .map(|c| WreathFactor { cartan_type: c.cartan_type.clone(), autos: c.autos, n: c.n })
            .collect();
        out.sort_by(|a, b| (&a.cartan_type, a.n, a.autos).cmp(&(&b.cartan_type, b.n, b.autos)));
        out
    }
}

fn count_automorphisms(a: &[Vec<i64>], sigma: &[usize]) -> usize {
    fn go(a: &[Vec<i64>], sigma: &[usize], k: usize, img: &mut Vec<usize>, used: &mut [bool]) -> usize {
        let n = a.len();
        if k == n {
            let commutes = (0..n).all(|i| img[sigma[i]] == sigma[img[i]]);
            return usize::from(commutes);
        }
        let mut total = 0;
        for c in 0..n {
            if used[c] {
                continue;
            }
            if (0..k).all(|l| a[k][l] == a[c][img[l]] && a[l][k] == a[img[l]][c]) && a[k][k] == a[c][c] {
                img.push(c);
                used[c] = true;
                total += go(a, sigma, k + 1, img, used);
                used[c] = false;
                img.pop();
            }
        }
        total
    }
    go(a, sigma, 0, &mut Vec::new(), &mut vec![false; a.len()])
}

/// Decomposes `N_{W^F}(I)` for a `τ`-stable `subset` of positions of Δ.
/// Returns [`Error::Falsified`] if one of the structural checks fails.
pub fn decompose(w: &WeylGroup, f: &Twist, subset: &[usize]) -> Result<LeviDecomposition> {
    let d = decompose_report(w, f, subset)?;
    if let Some(c) = d.checks.iter().find(|c| !c.pass) {
        return Err(Error::Falsified(format!("Levi check {} failed for I = {subset:?}", c.name)));
    }
    Ok(d)
}

/// As [`decompose`], but failed checks stay in the report.
pub fn decompose_report(w: &WeylGroup, f: &Twist, subset: &[usize]) -> Result<LeviDecomposition> {
    let based = w.based();
    let rank = based.semisimple_rank();
    let mut subset = subset.to_vec();
    subset.sort();
    if subset.iter().any(|&k| k >= rank) || subset.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::Invalid(format!("subset {subset:?} is out of range or repeated")));
    }
    if !f.is_stable(&subset) {
        return Err(Error::Invalid(format!("I = {subset:?} is not tau-stable")));
    }
    let sigma = f.sigma();
    let cartan = based.cartan_matrix();

    // components of the Coxeter diagram of the w_J
    let orbits = orbits_of(sigma, &subset);
    let w_js: Vec<usize> = orbits.iter().map(|j| w.longest_element(j)).collect();
    let mut comp_of_orbit = vec![usize::MAX; orbits.len()];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..orbits.len() {
        if comp_of_orbit[start] != usize::MAX {
            continue;
        }
        let c = comps.len();
        comp_of_orbit[start] = c;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for y in 0..orbits.len() {
                if comp_of_orbit[y] == usize::MAX && w.element_order(w.mul(w_js[x], w_js[y])) >= 3 {
                    comp_of_orbit[y] = c;
                    members.push(y);
                }
            }
            k += 1;
        }
        comps.push(members);
    }

    let relative: Vec<usize> = (0..w.order()).filter(|&a| f.apply(a) == a && w.stabilizes_simple_set(a, &subset)).collect();
    let perms: Vec<Vec<usize>> = relative
        .iter()
        .map(|&a| w.induced_simple_permutation(a, &subset).expect("stabilizes I"))
        .collect();
    let pos_in_subset: HashMap<usize, usize> = subset.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let image_of = |p: &[usize], node: usize| p[pos_in_subset[&node]];

    let mut components = Vec::new();
    let mut node_comp = HashMap::new();
    for (ci, orbit_ids) in comps.iter().enumerate() {
        let mut nodes: Vec<usize> = orbit_ids.iter().flat_map(|&o| orbits[o].clone()).collect();
        nodes.sort();
        for &n in &nodes {
            node_comp.insert(n, ci);
        }
        let sub: Vec<Vec<i64>> = nodes.iter().map(|&i| nodes.iter().map(|&j| cartan[i][j]).collect()).collect();
        let cartan_type = CartanType::from_cartan_matrix(&sub, nodes.len())?.semisimple_label();
        let local_sigma: Vec<usize> = nodes.iter().map(|&i| nodes.iter().position(|&j| j == sigma[i]).expect("stable")).collect();
        let mut twist = 1;
        let mut cur = local_sigma.clone();
        while cur.iter().enumerate().any(|(i, &x)| i != x) {
            cur = cur.iter().map(|&x| local_sigma[x]).collect();
            twist += 1;
        }
        let gens: Vec<usize> = orbit_ids.iter().map(|&o| w_js[o]).collect();
        let cox: Vec<Vec<u32>> = gens
            .iter()
            .map(|&a| gens.iter().map(|&b| if a == b { 1 } else { w.element_order(w.mul(a, b)) as u32 }).collect())
            .collect();
        let fixed_type = recognize(&cox).map(|t| t.label()).unwrap_or_else(|| "?".into());
        let full_autos = count_automorphisms(&sub, &local_sigma);
        let mut induced: HashSet<Vec<usize>> = HashSet::new();
        for p in &perms {
            if nodes.iter().all(|&n| nodes.contains(&image_of(p, n))) {
                induced.insert(nodes.iter().map(|&n| image_of(p, n)).collect());
            }
        }
        components.push(LeviComponent { nodes, cartan_type, fixed_type, twist, full_autos, autos: induced.len() });
    }

    let mut classes: Vec<LeviClass> = Vec::new();
    for (ci, c) in components.iter().enumerate() {
        match classes.iter_mut().find(|k| k.cartan_type == c.cartan_type && k.twist == c.twist) {
            Some(k) => {
                k.n += 1;
                k.members.push(ci);
            }
            None => classes.push(LeviClass {
                cartan_type: c.cartan_type.clone(),
                fixed_type: c.fixed_type.clone(),
                twist: c.twist,
                autos: c.autos,
                full_autos: c.full_autos,
                n: 1,
                members: vec![ci],
            }),
        }
    }
    classes.sort_by(|a, b| (&a.cartan_type, a.twist, a.n).cmp(&(&b.cartan_type, b.twist, b.n)));

    let centralizer: Vec<usize> = relative
        .iter()
        .zip(&perms)
        .filter(|(_, p)| p.iter().enumerate().all(|(i, &x)| subset[i] == x))
        .map(|(&a, _)| a)
        .collect();
    let distinct: HashSet<&Vec<usize>> = perms.iter().collect();

    let mut checks = Vec::new();
    checks.push(Check {
        name: "relative_order_is_centralizer_times_image".into(),
        pass: relative.len() == centralizer.len() * distinct.len(),
    });
    checks.push(Check {
        name: "components_partition_I".into(),
        pass: components.iter().map(|c| c.nodes.len()).sum::<usize>() == subset.len()
            && classes.iter().map(|k| k.n * components[k.members[0]].nodes.len()).sum::<usize>() == subset.len(),
    });
    // each element permutes components, preserving the Cartan matrix, and
    // conjugates the generators of a component onto those of its image
    let mut action_ok = true;
    let mut roots_ok = true;
    let comp_roots: Vec<HashSet<usize>> = components
        .iter()
        .map(|c| based.root_subsystem(&c.nodes).map(|s| s.parent_roots.into_iter().collect()))
        .collect::<Result<_>>()?;
    let w_j_of_orbit: HashMap<Vec<usize>, usize> = orbits.iter().cloned().zip(w_js.iter().copied()).collect();
    for (&a, p) in relative.iter().zip(&perms) {
        for (ci, c) in components.iter().enumerate() {
            let target = node_comp[&image_of(p, c.nodes[0])];
            let img: Vec<usize> = c.nodes.iter().map(|&n| image_of(p, n)).collect();
            if img.iter().any(|n| node_comp[n] != target) {
                action_ok = false;
                continue;
            }
            let tc = &components[target];
            if tc.cartan_type != c.cartan_type || tc.twist != c.twist {
                action_ok = false;
            }
            for &n in &c.nodes {
                for &m in &c.nodes {
                    if cartan[n][m] != cartan[image_of(p, n)][image_of(p, m)] {
                        action_ok = false;
                    }
                }
            }
            for o in comps[ci].iter().map(|&o| &orbits[o]) {
                let mut image_orbit: Vec<usize> = o.iter().map(|&n| image_of(p, n)).collect();
                image_orbit.sort();
                match w_j_of_orbit.get(&image_orbit) {
                    Some(&target_wj) if w.conj(a, w_j_of_orbit[o]) == target_wj => {}
                    _ => action_ok = false,
                }
            }
            let e = w.element(a);
            let mapped: HashSet<usize> = comp_roots[ci].iter().map(|&r| e.apply(r)).collect();
            if mapped != comp_roots[target] {
                roots_ok = false;
            }
        }
    }
    checks.push(Check { name: "action_preserves_component_structure".into(), pass: action_ok });
    checks.push(Check { name: "component_permutation_matches_root_action".into(), pass: roots_ok });
    checks.push(Check {
        name: "automorphism_orders_divide_6".into(),
        pass: components.iter().all(|c| 6 % c.autos == 0 && c.full_autos % c.autos == 0),
    });

    Ok(LeviDecomposition {
        subset,
        components,
        classes,
        centralizer_order: centralizer.len(),
        relative_order: relative.len(),
        image_order: distinct.len(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{standard, Isogeny};

    #[test]
    fn a5_three_a1() {
        let w = WeylGroup::generate(&standard("A5", Isogeny::SimplyConnected).unwrap()).unwrap();
        let f = Twist::identity(&w);
        let d = decompose(&w, &f, &[0, 2, 4]).unwrap();
        let shape = d.wreath_shape();
        assert_eq!(shape.len(), 1);
        assert_eq!((shape[0].cartan_type.as_str(), shape[0].autos, shape[0].n), ("A1", 1, 3));
        assert_eq!(d.relative_order, 6);
        assert_eq!(d.image_order, 6);
        assert_eq!(d.centralizer_order, 1);
    }

    #[test]
    fn empty_and_full() {
        let w = WeylGroup::generate(&standard("A2", Isogeny::SimplyConnected).unwrap()).unwrap();
        let f = Twist::identity(&w);
        let d = decompose(&w, &f, &[]).unwrap();
        assert!(d.wreath_shape().is_empty());
        assert_eq!((d.relative_order, d.centralizer_order), (6, 6));
        let d = decompose(&w, &f, &[0, 1]).unwrap();
        let shape = d.wreath_shape();
        assert_eq!((shape[0].cartan_type.as_str(), shape[0].autos, shape[0].n), ("A2", 1, 1));
        assert_eq!(d.classes[0].full_autos, 2);
    }

    #[test]
    fn d4_triality_outer_orbit() {
        let w = WeylGroup::generate(&standard("D4", Isogeny::SimplyConnected).unwrap()).unwrap();
        let f = Twist::from_diagram(&w, &[2, 1, 3, 0]).unwrap();
        let d = decompose(&w, &f, &[0, 2, 3]).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.classes[0].n, 1);
        assert_eq!(d.components[0].fixed_type, "A1");
        assert_eq!(d.components[0].twist, 3);
        assert!(decompose(&w, &f, &[0]).is_err());
    }
}
