#!/usr/bin/env python3
"""Regenerate the JSON job fixtures (kept checked in for reproducibility)."""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def family_form(m, r, s):
    # omega = df ^ dz1 ^ ... ^ dzr for
    # f = z1^m + z1^(m-1)(z2+..+zr) + z_{r+1}^m + ... + z_n^m.
    # Only the dz_j ^ dz1 ^ ... ^ dzr components survive (j > r); moving dz_j
    # to the end of the index set costs (-1)^r.
    n = 2 * r + s
    sign = "-" if r % 2 == 1 else ""
    data = []
    for j in range(r + 1, n + 1):
        coef = f"{sign}{m}*z{j}" + (f"^{m-1}" if m > 2 else "")
        data.append({"indices": list(range(1, r + 1)) + [j], "coef": coef})
    return {"n": n, "kind": "form", "k": r + s - 1, "data": data}


def pullback_radial(base_dim, n):
    fields = [[f"z{i}" for i in range(1, base_dim + 1)] + ["0"] * (n - base_dim)]
    for j in range(base_dim + 1, n + 1):
        fields.append(["0"] * (j - 1) + ["1"] + ["0"] * (n - j))
    return {"n": n, "kind": "vector_fields", "k": n - base_dim + 1, "data": fields}


def pullback_of(base_comps, n):
    base_dim = len(base_comps)
    fields = [list(base_comps) + ["0"] * (n - base_dim)]
    for j in range(base_dim + 1, n + 1):
        fields.append(["0"] * (j - 1) + ["1"] + ["0"] * (n - j))
    return {"n": n, "kind": "vector_fields", "k": n - base_dim + 1, "data": fields}


def poisson(n, entries):
    return {"n": n, "kind": "poisson",
            "data": [{"indices": [i, j], "coef": c} for (i, j, c) in entries]}


SPHERE = {"dim": 2, "top_simplices": [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]],
          "orientable": True}
TORUS = {"dim": 2,
         "top_simplices": [[i % 7, (i + 1) % 7, (i + 3) % 7] for i in range(7)]
         + [[i % 7, (i + 3) % 7, (i + 2) % 7] for i in range(7)],
         "orientable": True}
TWO_CIRCLES = {"dim": 1,
               "top_simplices": [[0, 1], [1, 2], [2, 0], [3, 4], [4, 5], [5, 3]],
               "orientable": True}


def job(task, **kw):
    out = {"schema": 1, "task": task}
    out.update(kw)
    return out


FILES = {
    "family_m3_sing.json": job("sing", foliation=family_form(3, 3, 3)),
    "pullback_radial_c4_sing.json": job("sing", foliation=pullback_radial(3, 4)),
    "radial3_residue.json": job("residue", field=["z1", "z2", "z3"], phi="c3"),
    "pullback_radial_c4_slice.json": job("slice-residue", foliation=pullback_radial(3, 4),
                                         phi="c3", seed=7),
    "poisson_linear_c4.json": job("poisson", foliation=poisson(4, [(1, 2, "z3")])),
    "torus_homology.json": job("topo-homology", complex=TORUS),
    "sphere_intersect.json": job("topo-intersect", complex=SPHERE, s1=[0, 1], s2=[0, 1]),
}

corpus = [
    dict(job("sing", foliation=family_form(3, 3, 3)), id="family_m3_sing"),
    dict(job("sing", foliation=family_form(2, 3, 3)), id="family_m2_sing"),
    dict(job("sing", foliation=pullback_radial(3, 4)), id="pullback_radial_c4_sing"),
    dict(job("involutive", foliation=pullback_radial(3, 4)), id="pullback_involutive"),
    dict(job("involutive",
             foliation={"n": 3, "kind": "vector_fields", "k": 2,
                        "data": [["1", "0", "z2"], ["0", "1", "0"]]}),
         id="contact_involutive"),
    dict(job("residue", field=["z1", "z2"], phi="c2"), id="radial2_c2"),
    dict(job("residue", field=["z1", "z2", "z3"], phi="c3"), id="radial3_c3"),
    dict(job("residue", field=["z1", "z2", "z3"], phi="c1^3"), id="radial3_c1cubed"),
    dict(job("residue", field=["z1^2", "z2^3"], phi="c2"), id="monomial_c2"),
    dict(job("residue", field=["z1^2-z2", "z2^2"], phi="c2"), id="cusp_c2"),
    dict(job("residue", field=["z1^2-1", "z2"], phi="c2"), id="not_isolated",
         expect="NotIsolated"),
    dict(job("slice-residue", foliation=pullback_radial(3, 4), phi="c3", seed=7),
         id="slice_c4_seed7"),
    dict(job("slice-residue", foliation=pullback_radial(3, 4), phi="c3", seed=11),
         id="slice_c4_seed11"),
    dict(job("slice-residue", foliation=pullback_radial(4, 6), phi="c4", seed=3),
         id="slice_c6_seed3"),
    dict(job("slice-residue", foliation=pullback_of(["z1", "z2", "0"], 4), phi="c3",
             seed=2, retries=4),
         id="slice_fat_singular_locus", expect="RetriesExhausted"),
    dict(job("poisson", foliation=poisson(4, [(1, 2, "z3")])), id="poisson_linear_c4"),
    dict(job("poisson", foliation=poisson(4, [(1, 2, "1")])), id="poisson_constant_c4"),
    dict(job("poisson", foliation=poisson(6, [(1, 2, "z3^2")])), id="poisson_quadratic_c6"),
    dict(job("poisson", foliation=poisson(4, [(1, 2, "1"), (3, 4, "z1")])),
         id="poisson_jacobi_violator"),
    dict(job("topo-homology", complex=SPHERE), id="sphere_homology"),
    dict(job("topo-homology", complex=TORUS), id="torus_homology"),
    dict(job("topo-homology", complex=TWO_CIRCLES), id="two_circles_homology"),
    dict(job("topo-intersect", complex=SPHERE, s1=[0, 1], s2=[0, 1]),
         id="sphere_edge_self_intersect"),
    dict(job("topo-intersect", complex=TORUS, s1=[0, 1], s2=[0, 1, 3]),
         id="torus_edge_in_triangle"),
]
FILES["corpus.json"] = job("verify", corpus=corpus)

for name, content in FILES.items():
    with open(os.path.join(HERE, name), "w") as f:
        json.dump(content, f, indent=2, sort_keys=True)
        f.write("\n")
print("wrote", len(FILES), "fixture files")
