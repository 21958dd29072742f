use serde_json::{json, Value};

use super::{expected_degrees, MapSpec, PortraitLabel};

/// Degrees and component data of the curve `Φ_{M,N}(X, C) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInfo {
    pub label: PortraitLabel,
    pub d: u32,
    pub deg_x: u64,
    pub deg_c: u64,
    pub components: u32,
    pub singular_note: String,
}

pub fn curve_info(spec: MapSpec, label: PortraitLabel) -> CurveInfo {
    let (deg_x, deg_c) = expected_degrees(spec, label);
    let (components, singular_note) = if label.m() == 0 {
        (1, "nonsingular".to_string())
    } else {
        (spec.d() - 1, "points with f_{d,c}^{M-1}(x) = 0".to_string())
    };
    CurveInfo { label, d: spec.d(), deg_x, deg_c, components, singular_note }
}

impl CurveInfo {
    pub fn to_json(&self) -> Value {
        json!({
            "M": self.label.m(),
            "N": self.label.n(),
            "d": self.d,
            "degX": self.deg_x,
            "degC": self.deg_c,
            "components": self.components,
            "singular_note": self.singular_note,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn info(d: u32, m: u32, n: u32) -> CurveInfo {
        curve_info(MapSpec::new(d).unwrap(), PortraitLabel::new(m, n).unwrap())
    }

    #[test]
    fn examples() {
        let a = info(2, 0, 2);
        assert_eq!((a.deg_x, a.deg_c, a.components), (2, 1, 1));
        assert_eq!(a.singular_note, "nonsingular");
        let b = info(2, 2, 2);
        assert_eq!((b.deg_x, b.deg_c, b.components), (4, 2, 1));
        assert_eq!(info(3, 1, 1).components, 2);
    }

    #[test]
    fn json_layout() {
        let text = info(3, 1, 1).to_json().to_string();
        assert_eq!(
            text,
            r#"{"M":1,"N":1,"d":3,"degX":6,"degC":2,"components":2,"singular_note":"points with f_{d,c}^{M-1}(x) = 0"}"#
        );
    }
}
