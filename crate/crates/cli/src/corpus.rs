//! The curated instance corpus shipped under `corpus/`.

use crate::instance::InstanceFile;

/// Files in `corpus/`, in a fixed order.
pub const SHIPPED: &[(&str, &str)] = &[
    ("h4", include_str!("../corpus/h4.json")),
    ("h4-module", include_str!("../corpus/h4-module.json")),
    ("t3-a3", include_str!("../corpus/t3-a3.json")),
    ("t3-a4", include_str!("../corpus/t3-a4.json")),
    ("t3-a5", include_str!("../corpus/t3-a5.json")),
    ("t3-a6", include_str!("../corpus/t3-a6.json")),
    ("rv-sharp-a3", include_str!("../corpus/rv-sharp-a3.json")),
    ("rv-sharp-a4", include_str!("../corpus/rv-sharp-a4.json")),
    ("rv-sharp-a5", include_str!("../corpus/rv-sharp-a5.json")),
    ("rv-sharp-a6", include_str!("../corpus/rv-sharp-a6.json")),
    ("b2-lift-a3", include_str!("../corpus/b2-lift-a3.json")),
    ("b2-lift-a4", include_str!("../corpus/b2-lift-a4.json")),
    ("b2-lift-a5", include_str!("../corpus/b2-lift-a5.json")),
    ("deep-cusp", include_str!("../corpus/deep-cusp.json")),
    ("parameter-line", include_str!("../corpus/parameter-line.json")),
    ("parameter-cusp", include_str!("../corpus/parameter-cusp.json")),
    ("parameter-t3-module", include_str!("../corpus/parameter-t3-module.json")),
];

pub fn cusp(module_is_maximal: bool) -> InstanceFile {
    if module_is_maximal {
        InstanceFile::monomial("h4-module", &[2, 3], &[2, 3], Some(&[2, 3]), 0)
    } else {
        InstanceFile::monomial("h4", &[2, 3], &[2, 3], None, 0)
    }
}

/// `I = (t^a, t^(a+1))` in `k[[t^a, t^(a+1), t^(a^2-a-1)]]`, lifted by `lift` variables.
pub fn t3(a: u32, lift: u32) -> InstanceFile {
    let id = if lift == 0 { format!("t3-a{a}") } else { format!("b2-lift-a{a}") };
    InstanceFile::monomial(id, &[a, a + 1, a * a - a - 1], &[a, a + 1], None, lift)
}

/// The maximal ideal of `k[[t^a, ..., t^(2a-1)]]`.
pub fn rv_sharp(a: u32) -> InstanceFile {
    let gens: Vec<u32> = (a..2 * a).collect();
    InstanceFile::monomial(format!("rv-sharp-a{a}"), &gens, &gens, None, 0)
}

/// The corpus rebuilt from its definitions.
pub fn curated() -> Vec<InstanceFile> {
    let mut out = vec![cusp(false), cusp(true)];
    out.extend((3..=6).map(|a| t3(a, 0)));
    out.extend((3..=6).map(rv_sharp));
    out.extend((3..=5).map(|a| t3(a, 1)));
    out.push(InstanceFile::monomial("deep-cusp", &[2, 3], &[4, 6], None, 0));
    out.push(InstanceFile::monomial("parameter-line", &[1], &[3], None, 0));
    out.push(InstanceFile::monomial("parameter-cusp", &[2, 3], &[2], None, 0));
    out.push(InstanceFile::monomial("parameter-t3-module", &[3, 4, 5], &[3], Some(&[3, 4, 5]), 0));
    out
}

/// The shipped corpus, parsed.
pub fn shipped() -> Vec<InstanceFile> {
    SHIPPED.iter().map(|(name, text)| InstanceFile::parse(text).unwrap_or_else(|e| panic!("corpus/{name}.json: {e}"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_matches_definitions() {
        let curated = curated();
        if std::env::var_os("HILBOUND_BLESS").is_some() {
            let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
            for inst in &curated {
                std::fs::write(dir.join(format!("{}.json", inst.id)), inst.to_json()).unwrap();
            }
        }
        assert_eq!(shipped(), curated);
        for ((name, _), inst) in SHIPPED.iter().zip(&curated) {
            assert_eq!(*name, inst.id);
        }
    }
}
