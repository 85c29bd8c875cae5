//! Partial actions of finite groups and monoids on finite sets, partial maps, and
//! the span ("bullet set") formulation of the axioms.
//!
//! The domain of `α_g` is stored under `g`, i.e. `domains[g] = X_{g⁻¹}`, so that
//! `X_g` is `domains[g⁻¹]` for groups.

mod monoid;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use monoid::FiniteMonoid;

/// Subsets of a finite set (at most 64 elements) as bitmasks.
pub type Mask = u64;

fn bit(m: Mask, x: usize) -> bool {
    m >> x & 1 == 1
}

fn full(n: usize) -> Mask {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialActionDatum {
    #[serde(skip)]
    group: FiniteMonoid,
    set_size: usize,
    domains: Vec<Mask>,
    maps: Vec<Vec<Option<usize>>>,
}

/// First violating instance of an axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub g: usize,
    pub h: Option<usize>,
    pub x: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub violation: Option<Violation>,
    /// `α_g(X_{g⁻¹} ∩ X_h) = X_g ∩ X_{gh}` for all `g, h`; reported when PA holds.
    pub pa2_prime: Option<bool>,
}

impl Verdict {
    fn from(v: Option<Violation>) -> Verdict {
        Verdict { holds: v.is_none(), violation: v, pa2_prime: None }
    }
}

impl PartialActionDatum {
    /// `domains[g]` is the domain of `α_g`; `maps[g][x]` is defined exactly on it.
    pub fn new(
        group: FiniteMonoid,
        set_size: usize,
        domains: Vec<Mask>,
        maps: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let n = group.size();
        if set_size > 64 {
            return Err(Error::MalformedDatum("sets are limited to 64 elements".into()));
        }
        if domains.len() != n || maps.len() != n {
            return Err(Error::MalformedDatum(format!(
                "need one domain and one map per element of a monoid of size {n}"
            )));
        }
        for g in 0..n {
            if domains[g] & !full(set_size) != 0 {
                return Err(Error::MalformedDatum(format!("domain of element {g} leaves the set")));
            }
            if maps[g].len() != set_size {
                return Err(Error::MalformedDatum(format!("map of element {g} has wrong length")));
            }
            for x in 0..set_size {
                match maps[g][x] {
                    Some(y) if y >= set_size => {
                        return Err(Error::MalformedDatum(format!("alpha_{g}({x}) = {y} leaves the set")))
                    }
                    Some(_) if !bit(domains[g], x) => {
                        return Err(Error::MalformedDatum(format!("alpha_{g} defined outside its domain at {x}")))
                    }
                    None if bit(domains[g], x) => {
                        return Err(Error::MalformedDatum(format!("alpha_{g} undefined at {x} in its domain")))
                    }
                    _ => {}
                }
            }
        }
        Ok(PartialActionDatum { group, set_size, domains, maps })
    }

    pub fn group(&self) -> &FiniteMonoid {
        &self.group
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    /// Domain of `α_g`, i.e. `X_{g⁻¹}`.
    pub fn domain(&self, g: usize) -> Mask {
        self.domains[g]
    }

    pub fn domains(&self) -> &[Mask] {
        &self.domains
    }

    pub fn maps(&self) -> &[Vec<Option<usize>>] {
        &self.maps
    }

    /// `X_g` (requires a group).
    pub fn x_sub(&self, g: usize) -> Mask {
        self.domains[self.group.inverse(g).expect("X_g needs inverses")]
    }

    pub fn act(&self, g: usize, x: usize) -> Option<usize> {
        self.maps[g][x]
    }

    fn elements(&self, m: Mask) -> impl Iterator<Item = usize> + '_ {
        (0..self.set_size).filter(move |&x| bit(m, x))
    }

    fn require_group(&self) -> Result<()> {
        if self.group.is_group() {
            Ok(())
        } else {
            Err(Error::MalformedDatum("this check needs a group".into()))
        }
    }

    fn unit_violation(&self, tag: &str) -> Option<Violation> {
        let e = self.group.unit();
        (0..self.set_size).find(|&x| self.act(e, x) != Some(x)).map(|x| Violation {
            axiom: format!("{tag}1"),
            g: e,
            h: None,
            x,
        })
    }

    /// (PA1)–(PA3); reports (PA2′) as well when they hold.
    pub fn check_pa(&self) -> Result<Verdict> {
        self.require_group()?;
        let n = self.group.size();
        let mut v = self.unit_violation("PA");
        if v.is_none() {
            'pa2: for g in 0..n {
                for h in 0..n {
                    for x in self.elements(self.domain(g) & self.x_sub(h)) {
                        let y = self.act(g, x).unwrap();
                        if !bit(self.x_sub(g) & self.x_sub(self.group.mul(g, h)), y) {
                            v = Some(Violation { axiom: "PA2".into(), g, h: Some(h), x });
                            break 'pa2;
                        }
                    }
                }
            }
        }
        if v.is_none() {
            'pa3: for g in 0..n {
                for h in 0..n {
                    let hg = self.group.mul(h, g);
                    for x in self.elements(self.domain(g) & self.domain(hg)) {
                        let lhs = self.act(g, x).and_then(|y| self.act(h, y));
                        if lhs != self.act(hg, x) {
                            v = Some(Violation { axiom: "PA3".into(), g, h: Some(h), x });
                            break 'pa3;
                        }
                    }
                }
            }
        }
        let mut verdict = Verdict::from(v);
        if verdict.holds {
            let mut ok = true;
            for g in 0..n {
                for h in 0..n {
                    let image: Mask = self
                        .elements(self.domain(g) & self.x_sub(h))
                        .map(|x| 1u64 << self.act(g, x).unwrap())
                        .fold(0, |a, b| a | b);
                    ok &= image == self.x_sub(g) & self.x_sub(self.group.mul(g, h));
                }
            }
            verdict.pa2_prime = Some(ok);
        }
        Ok(verdict)
    }

    /// (LPA1)–(LPA3).
    pub fn check_lpa(&self) -> Result<Verdict> {
        self.require_group()?;
        let n = self.group.size();
        let mut v = self.unit_violation("LPA");
        if v.is_none() {
            'outer: for g in 0..n {
                for h in 0..n {
                    let hg = self.group.mul(h, g);
                    for x in self.elements(self.domain(g)) {
                        let y = self.act(g, x).unwrap();
                        if !bit(self.domain(h), y) {
                            continue;
                        }
                        if !bit(self.domain(hg), x) {
                            v = Some(Violation { axiom: "LPA2".into(), g, h: Some(h), x });
                            break 'outer;
                        }
                        if self.act(h, y) != self.act(hg, x) {
                            v = Some(Violation { axiom: "LPA3".into(), g, h: Some(h), x });
                            break 'outer;
                        }
                    }
                }
            }
        }
        Ok(Verdict::from(v))
    }

    /// (QPA1)–(QPA2): associativity wherever both sides are defined. Accepts monoids.
    pub fn check_qpa(&self) -> Result<Verdict> {
        let n = self.group.size();
        let mut v = self.unit_violation("QPA");
        if v.is_none() {
            'outer: for g in 0..n {
                for h in 0..n {
                    let hg = self.group.mul(h, g);
                    for x in self.elements(self.domain(g) & self.domain(hg)) {
                        let y = self.act(g, x).unwrap();
                        if bit(self.domain(h), y) && self.act(h, y) != self.act(hg, x) {
                            v = Some(Violation { axiom: "QPA2".into(), g, h: Some(h), x });
                            break 'outer;
                        }
                    }
                }
            }
        }
        Ok(Verdict::from(v))
    }

    /// For every `g`, `α_g(X_{g⁻¹}) ⊆ X_g`.
    pub fn images_in_targets(&self) -> bool {
        (0..self.group.size())
            .all(|g| self.elements(self.domain(g)).all(|x| bit(self.x_sub(g), self.act(g, x).unwrap())))
    }

    /// Each `α_g: X_{g⁻¹} -> X_g` is a bijection with inverse `α_{g⁻¹}`.
    pub fn bijections_hold(&self) -> bool {
        (0..self.group.size()).all(|g| {
            let gi = self.group.inverse(g).unwrap();
            self.elements(self.domain(g)).all(|x| {
                let y = self.act(g, x).unwrap();
                bit(self.x_sub(g), y) && self.act(gi, y) == Some(x)
            }) && self.elements(self.x_sub(g)).all(|y| self.act(gi, y).and_then(|x| self.act(g, x)) == Some(y))
        })
    }
}

/// Restriction of a global action (`action[g][y] = g·y`) to a subset of its set.
/// The result acts on the subset, re-indexed in increasing order.
pub fn restrict_global(group: &FiniteMonoid, action: &[Vec<usize>], subset: Mask) -> Result<PartialActionDatum> {
    if !group.is_group() {
        return Err(Error::NotAGroup("restriction needs a group".into()));
    }
    let n = group.size();
    if action.len() != n {
        return Err(Error::NotAnAction("one permutation per group element required".into()));
    }
    let m = action[0].len();
    for g in 0..n {
        if action[g].len() != m || action[g].iter().any(|&y| y >= m) {
            return Err(Error::NotAnAction(format!("row {g} is malformed")));
        }
    }
    if (0..m).any(|y| action[group.unit()][y] != y) {
        return Err(Error::NotAnAction("unit does not act as the identity".into()));
    }
    for g in 0..n {
        for h in 0..n {
            if (0..m).any(|y| action[group.mul(g, h)][y] != action[g][action[h][y]]) {
                return Err(Error::NotAnAction(format!("(gh)y != g(hy) for g={g}, h={h}")));
            }
        }
    }
    if subset & !full(m) != 0 {
        return Err(Error::NotAnAction("subset leaves the set".into()));
    }
    let members: Vec<usize> = (0..m).filter(|&y| bit(subset, y)).collect();
    let pos = |y: usize| members.iter().position(|&z| z == y);
    let mut domains = vec![0; n];
    let mut maps = vec![vec![None; members.len()]; n];
    for g in 0..n {
        for (i, &y) in members.iter().enumerate() {
            if let Some(j) = pos(action[g][y]) {
                domains[g] |= 1 << i;
                maps[g][i] = Some(j);
            }
        }
    }
    PartialActionDatum::new(group.clone(), members.len(), domains, maps)
}

/// A partial map `X ⇢ Y`: a function on a subset of `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialMap {
    pub source_size: usize,
    pub target_size: usize,
    pub map: Vec<Option<usize>>,
}

impl PartialMap {
    pub fn new(source_size: usize, target_size: usize, map: Vec<Option<usize>>) -> Result<PartialMap> {
        if map.len() != source_size || map.iter().flatten().any(|&y| y >= target_size) {
            return Err(Error::SizeMismatch("partial map does not fit its source and target".into()));
        }
        Ok(PartialMap { source_size, target_size, map })
    }

    pub fn identity(n: usize) -> PartialMap {
        PartialMap { source_size: n, target_size: n, map: (0..n).map(Some).collect() }
    }

    pub fn empty(source_size: usize, target_size: usize) -> PartialMap {
        PartialMap { source_size, target_size, map: vec![None; source_size] }
    }

    pub fn domain(&self) -> Mask {
        self.map.iter().enumerate().filter(|(_, y)| y.is_some()).fold(0, |m, (x, _)| m | 1 << x)
    }
}

/// `g ∘ f` with domain `f⁻¹(dom g) ∩ dom f` (the composition span).
pub fn compose_partial_maps(f: &PartialMap, g: &PartialMap) -> Result<PartialMap> {
    if f.target_size != g.source_size {
        return Err(Error::SizeMismatch(format!(
            "f lands in a set of size {}, g starts at {}",
            f.target_size, g.source_size
        )));
    }
    Ok(PartialMap {
        source_size: f.source_size,
        target_size: g.target_size,
        map: f.map.iter().map(|y| y.and_then(|y| g.map[y])).collect(),
    })
}

/// Triples `(h, g, x)` of `G × G × X`.
pub type Triples = BTreeSet<(usize, usize, usize)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BulletSets {
    /// `G•X = {(g, x) : x ∈ X_{g⁻¹}}`
    pub g_x: BTreeSet<(usize, usize)>,
    /// `G•(G•X) = {(h, g, x) : x ∈ X_{g⁻¹}, α_g(x) ∈ X_{h⁻¹}}`
    pub g_gx: Triples,
    /// `(G×G)•X = {(h, g, x) : x ∈ X_{(hg)⁻¹}}`
    pub gg_x: Triples,
    /// `(G•G)•X = (G × G•X) ∩ (G×G)•X`
    pub gbg_x: Triples,
    pub theta_bar_defined: bool,
    pub theta_bar_iso: bool,
}

pub fn build_bullet_sets(d: &PartialActionDatum) -> BulletSets {
    let n = d.group().size();
    let mut g_x = BTreeSet::new();
    let mut g_gx = Triples::new();
    let mut gg_x = Triples::new();
    let mut gbg_x = Triples::new();
    for g in 0..n {
        for x in 0..d.set_size() {
            let in_g = bit(d.domain(g), x);
            if in_g {
                g_x.insert((g, x));
            }
            for h in 0..n {
                let in_hg = bit(d.domain(d.group().mul(h, g)), x);
                if in_g && bit(d.domain(h), d.act(g, x).unwrap()) {
                    g_gx.insert((h, g, x));
                }
                if in_hg {
                    gg_x.insert((h, g, x));
                    if in_g {
                        gbg_x.insert((h, g, x));
                    }
                }
            }
        }
    }
    let theta_bar_defined = g_gx.is_subset(&gg_x);
    let theta_bar_iso = g_gx == gbg_x;
    BulletSets { g_x, g_gx, gg_x, gbg_x, theta_bar_defined, theta_bar_iso }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Globality {
    /// every domain is the whole set
    pub elementwise: bool,
    /// `G•(G•X) = (G×G)•X` as spans over `G × G × X`
    pub span: bool,
}

impl Globality {
    pub fn agree(&self) -> bool {
        self.elementwise == self.span
    }
}

/// Both globality criteria for a partial action.
pub fn globality(d: &PartialActionDatum) -> Result<Globality> {
    let pa = d.check_pa()?;
    if !pa.holds {
        return Err(Error::NotPartialAction(format!("{:?}", pa.violation)));
    }
    let elementwise = d.domains().iter().all(|&m| m == full(d.set_size()));
    let b = build_bullet_sets(d);
    Ok(Globality { elementwise, span: b.g_gx == b.gg_x })
}

pub fn is_global(d: &PartialActionDatum) -> Result<bool> {
    globality(d).map(|g| g.elementwise)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> FiniteMonoid {
        FiniteMonoid::cyclic(2)
    }

    fn swap() -> Vec<Vec<usize>> {
        vec![vec![0, 1], vec![1, 0]]
    }

    /// C₂ on {0,1}: α_e = id, dom α_g = {0}, α_g(0) = 1.
    fn lpa_witness() -> PartialActionDatum {
        PartialActionDatum::new(c2(), 2, vec![0b11, 0b01], vec![vec![Some(0), Some(1)], vec![Some(1), None]]).unwrap()
    }

    #[test]
    fn restriction_of_swap_to_a_point() {
        let d = restrict_global(&c2(), &swap(), 0b01).unwrap();
        assert_eq!(d.set_size(), 1);
        assert_eq!(d.domains(), &[0b1, 0b0]);
        let v = d.check_pa().unwrap();
        assert!(v.holds);
        assert_eq!(v.pa2_prime, Some(true));
        assert!(!is_global(&d).unwrap());
    }

    #[test]
    fn lpa_not_pa() {
        let d = lpa_witness();
        assert!(d.check_lpa().unwrap().holds);
        let pa = d.check_pa().unwrap();
        assert!(!pa.holds);
        assert_eq!(pa.violation.unwrap().axiom, "PA2");
        assert!(!d.images_in_targets());
        let b = build_bullet_sets(&d);
        assert!(b.theta_bar_defined);
        assert!(!b.theta_bar_iso);
    }

    #[test]
    fn global_actions_are_global() {
        let d = restrict_global(&c2(), &swap(), 0b11).unwrap();
        assert!(d.check_pa().unwrap().holds);
        assert!(is_global(&d).unwrap());
        let b = build_bullet_sets(&d);
        assert_eq!(b.g_gx, b.gg_x);
        assert_eq!(b.gbg_x, b.gg_x);
    }

    #[test]
    fn rotation_restricted_to_two_points() {
        let c3 = FiniteMonoid::cyclic(3);
        let rot: Vec<Vec<usize>> = (0..3).map(|g| (0..3).map(|y| (y + g) % 3).collect()).collect();
        let d = restrict_global(&c3, &rot, 0b011).unwrap();
        // X_{g⁻¹} for g = 1 is {x : x+1 ∈ {0,1}} = {0}
        assert_eq!(d.domain(1), 0b01);
        assert_eq!(d.domain(2), 0b10);
        assert!(d.check_pa().unwrap().holds);
        assert!(d.bijections_hold());
        assert!(build_bullet_sets(&d).theta_bar_iso);
    }

    #[test]
    fn rejects_non_actions() {
        let bad = vec![vec![0, 1], vec![0, 0]];
        assert!(restrict_global(&c2(), &bad, 0b11).is_err());
    }

    #[test]
    fn partial_map_composition() {
        let f = PartialMap::new(3, 2, vec![Some(1), None, Some(0)]).unwrap();
        let g = PartialMap::new(2, 2, vec![None, Some(0)]).unwrap();
        let gf = compose_partial_maps(&f, &g).unwrap();
        assert_eq!(gf.map, vec![Some(0), None, None]);
        assert_eq!(compose_partial_maps(&f, &PartialMap::identity(2)).unwrap(), f);
        assert_eq!(compose_partial_maps(&f, &PartialMap::empty(2, 4)).unwrap().domain(), 0);
        assert!(compose_partial_maps(&g, &f).is_err());
    }

    #[test]
    fn qpa_accepts_monoids() {
        let m = FiniteMonoid::new(vec![vec![0, 1], vec![1, 1]], 0).unwrap();
        let d = PartialActionDatum::new(m, 2, vec![0b11, 0b11], vec![vec![Some(0), Some(1)], vec![Some(1), Some(1)]])
            .unwrap();
        assert!(d.check_qpa().unwrap().holds);
        assert!(d.check_pa().is_err());
    }

    #[test]
    fn malformed_data_are_refused() {
        assert!(
            PartialActionDatum::new(c2(), 2, vec![0b11, 0b01], vec![vec![Some(0), Some(1)], vec![None, None]]).is_err()
        );
        assert!(PartialActionDatum::new(c2(), 2, vec![0b11, 0b01], vec![vec![Some(0), Some(5)], vec![Some(1), None]])
            .is_err());
    }

    fn all_data(group: &FiniteMonoid, n: usize) -> Vec<PartialActionDatum> {
        // one choice per element: a partial function on n points, coded base n+1
        let per = (n + 1).pow(n as u32);
        let k = group.size();
        let mut out = Vec::new();
        for code in 0..per.pow(k as u32) {
            let mut c = code;
            let mut domains = vec![0; k];
            let mut maps = vec![vec![None; n]; k];
            for g in 0..k {
                for x in 0..n {
                    let v = c % (n + 1);
                    c /= n + 1;
                    if v > 0 {
                        domains[g] |= 1 << x;
                        maps[g][x] = Some(v - 1);
                    }
                }
            }
            out.push(PartialActionDatum::new(group.clone(), n, domains, maps).unwrap());
        }
        out
    }

    #[test]
    fn exhaustive_c2_hierarchy() {
        let mut counts = [0usize; 3];
        for n in 0..=3 {
            for d in all_data(&c2(), n) {
                let pa = d.check_pa().unwrap().holds;
                let lpa = d.check_lpa().unwrap().holds;
                let qpa = d.check_qpa().unwrap().holds;
                let b = build_bullet_sets(&d);
                assert!(!pa || lpa);
                assert!(!lpa || qpa);
                assert_eq!(pa, lpa && b.theta_bar_iso, "{d:?}");
                assert_eq!(pa, lpa && d.images_in_targets());
                if lpa {
                    assert!(b.theta_bar_defined);
                }
                if pa {
                    assert!(d.bijections_hold());
                    assert_eq!(d.check_pa().unwrap().pa2_prime, Some(true));
                    let gl = globality(&d).unwrap();
                    assert!(gl.agree());
                }
                counts[0] += pa as usize;
                counts[1] += lpa as usize;
                counts[2] += qpa as usize;
            }
        }
        // over C₂ the unit makes LPA2 automatic, so LPA and QPA coincide
        assert!(counts[0] < counts[1] && counts[1] == counts[2]);
    }
}
