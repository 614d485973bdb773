//! Labels of the results that certificates rely on, each with a short
//! statement of what is used.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Citation {
    pub label: &'static str,
    pub quote: &'static str,
}

pub const EXPMAP_AXIOMS: Citation = Citation {
    label: "Section 2",
    quote: "an exponential map satisfies phi(.)|_{U=0} = id and phi_V phi_U = phi_{V+U}",
};

pub const PHI_CONSTRUCTION: Citation = Citation {
    label: "Lemma 3.1",
    quote: "z -> z + alpha U and t -> t + alpha U, with the induced image of y, are exponential maps",
};

pub const DHM: Citation = Citation {
    label: "Theorem 2.2",
    quote: "a non-trivial exponential map induces a non-trivial, homogeneous exponential map on gr(B)",
};

pub const GR_PRESENTATION: Citation = Citation {
    label: "Theorem 2.3",
    quote: "gr(A) = R[X,Y,Z,T] / (alpha(0) X^d Y - F(0,Z,T)) when gcd(alpha(0), F(0,Z,T)) = 1",
};

pub const SEPARABLE_MULTIPLE_ROOT: Citation = Citation {
    label: "Theorem 2.5",
    quote: "if each a_i has at least one separable multiple root, A = k^[m+2] iff k[Z,T] = k[f]^[1]",
};

pub const FILTRATION_FACTS: Citation = Citation {
    label: "Remark 3.3",
    quote: "w(x_i - lambda) = -1, w(y) = r; degree <= 0 elements lie in k[x, (x_i - lambda)^r y, z, t]; positive degree tops are divisible by y",
};

pub const ML_FROM_DK: Citation = Citation {
    label: "Proposition 3.4",
    quote: "DK(A) = k[x,z,t] implies ML(A) = k[x]",
};

pub const NONTRIVIAL_LINE_NOT_LINEAR: Citation = Citation {
    label: "Lemma 3.5",
    quote: "a non-trivial line is not linear with respect to any system of coordinates",
};

pub const DK_EQUALS_B: Citation = Citation {
    label: "Corollary 3.7",
    quote: "only multiple roots and f not linear in any coordinates give DK(A) = k[x,z,t]",
};

pub const ROOT_DATA: Citation = Citation {
    label: "Theorem 3.8(iii)",
    quote: "matched factors a_i, b_l have equal number of roots in the algebraic closure with equal multiplicities",
};

pub const AUTOMORPHISM_CRITERION: Citation = Citation {
    label: "Theorem 3.9",
    quote: "an endomorphism restricting to automorphisms of E and B with phi(I) = I, I = (alpha, F)B, is an automorphism",
};

pub const STABLE_ISOMORPHISM: Citation = Citation {
    label: "Theorem 3.10",
    quote: "D^[1] = R^[3] when R[Z,T]/(pi, G) = (R/pi)^[1]",
};

pub const FAMILY: Citation = Citation {
    label: "Corollary 3.11",
    quote: "different total root counts give pairwise non-isomorphic counterexamples to cancellation",
};

pub const ALL: [Citation; 13] = [
    EXPMAP_AXIOMS,
    PHI_CONSTRUCTION,
    DHM,
    GR_PRESENTATION,
    SEPARABLE_MULTIPLE_ROOT,
    FILTRATION_FACTS,
    ML_FROM_DK,
    NONTRIVIAL_LINE_NOT_LINEAR,
    DK_EQUALS_B,
    ROOT_DATA,
    AUTOMORPHISM_CRITERION,
    STABLE_ISOMORPHISM,
    FAMILY,
];

pub fn by_label(label: &str) -> Option<Citation> {
    ALL.iter().copied().find(|c| c.label == label)
}
