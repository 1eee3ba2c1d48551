//! Deterministic Schreier–Sims: base and strong generating set for a
//! permutation group, giving its exact order and a membership test.

use num_bigint::BigUint;

use super::perm::Perm;

struct Level {
    base: usize,
    /// Strong generators fixing the earlier base points.
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[x]` maps the base point to `x`.
    transversal: Vec<Option<Perm>>,
}

pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut strong: Vec<Perm> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<usize> = Vec::new();
        for g in &strong {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().expect("non-identity"));
            }
        }
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for l in 0..base.len() {
            chain.levels.push(chain.build_level(&base, &strong, l));
        }

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            match chain.find_missing(level) {
                None => i -= 1,
                Some((residue, drop)) => {
                    strong.push(residue.clone());
                    if drop == chain.levels.len() {
                        base.push(residue.first_moved().expect("non-identity residue"));
                    }
                    for l in level + 1..=drop {
                        let rebuilt = chain.build_level(&base, &strong, l);
                        if l < chain.levels.len() {
                            chain.levels[l] = rebuilt;
                        } else {
                            chain.levels.push(rebuilt);
                        }
                    }
                    i = drop as isize;
                }
            }
        }
        chain
    }

    fn build_level(&self, base: &[usize], strong: &[Perm], l: usize) -> Level {
        let gens: Vec<Perm> = strong
            .iter()
            .filter(|g| base[..l].iter().all(|&b| g.apply(b) == b))
            .cloned()
            .collect();
        let b = base[l];
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        transversal[b] = Some(Perm::identity(self.degree));
        let mut orbit = vec![b];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for s in &gens {
                let y = s.apply(x);
                if transversal[y].is_none() {
                    let ux = transversal[x].as_ref().expect("orbit point has a transversal");
                    transversal[y] = Some(s.compose(ux));
                    orbit.push(y);
                }
            }
        }
        Level {
            base: b,
            gens,
            orbit,
            transversal,
        }
    }

    /// First Schreier generator at `level` that does not sift through the
    /// levels below it, with the level where sifting stopped.
    fn find_missing(&self, level: usize) -> Option<(Perm, usize)> {
        let lv = &self.levels[level];
        for &beta in &lv.orbit {
            let u_beta = lv.transversal[beta].as_ref().expect("orbit point");
            for s in &lv.gens {
                let gamma = s.apply(beta);
                let u_gamma = lv.transversal[gamma].as_ref().expect("orbit is closed");
                let h = u_gamma.inverse().compose(&s.compose(u_beta));
                let (residue, drop) = self.sift(h, level + 1);
                if drop < self.levels.len() || !residue.is_identity() {
                    return Some((residue, drop));
                }
            }
        }
        None
    }

    fn sift(&self, mut h: Perm, from: usize) -> (Perm, usize) {
        for (l, lv) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(lv.base);
            match &lv.transversal[beta] {
                None => return (h, l),
                Some(u) => h = u.inverse().compose(&h),
            }
        }
        (h, self.levels.len())
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().map(|l| BigUint::from(l.orbit.len())).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, drop) = self.sift(g.clone(), 0);
        drop == self.levels.len() && residue.is_identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Perm {
        Perm::from_cycles(s, n).unwrap()
    }

    #[test]
    fn small_orders() {
        let s4 = StabChain::new(4, &[perm("(1,2,3,4)", 4), perm("(1,2)", 4)]);
        assert_eq!(s4.order(), BigUint::from(24u32));
        let c4 = StabChain::new(4, &[perm("(1,2,3,4)", 4)]);
        assert_eq!(c4.order(), BigUint::from(4u32));
        let trivial = StabChain::new(3, &[Perm::identity(3)]);
        assert_eq!(trivial.order(), BigUint::from(1u32));
        let a5 = StabChain::new(5, &[perm("(1,2,3)", 5), perm("(1,2,3,4,5)", 5)]);
        assert_eq!(a5.order(), BigUint::from(60u32));
        assert!(a5.contains(&perm("(1,2)(3,4)", 5)));
        assert!(!a5.contains(&perm("(1,2)", 5)));
    }

    #[test]
    fn symmetric_group_s10() {
        let gens = [perm("(1,2,3,4,5,6,7,8,9,10)", 10), perm("(1,2)", 10)];
        assert_eq!(StabChain::new(10, &gens).order(), BigUint::from(3_628_800u32));
    }
}
