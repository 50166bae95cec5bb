#!/usr/bin/env python3
"""Regenerate data/fields.jsonl, the bundled number-field snapshot.

Curation-time only: the C++ library never calls PARI, it reads the JSON Lines
file this script writes. Requires cypari2 (PARI/GP >= 2.15 for nflist).

    python3 tools/curation/build_snapshot.py > data/fields.jsonl
"""

import json
import os
import sys
from math import gcd

import cypari2

pari = cypari2.Pari()
# allocatemem reports on stdout; keep the snapshot stream clean
_saved = os.dup(1)
os.dup2(2, 1)
pari.allocatemem(4 * 10**9)
sys.stdout.flush()
os.dup2(_saved, 1)
os.close(_saved)
pari.set_real_precision(40)
gp = pari

gp('''quadexts(pol, B) =
  my(bnf = bnfinit(subst(pol, x, y), 1), r1 = bnf.sign[1], L = ideallist(bnf, B), res = List());
  for (N = 1, B,
    foreach (L[N], m,
      my(inf = vector(r1, i, 1), bnr = bnrinit(bnf, [m, inf]));
      foreach (subgrouplist(bnr, [2]), H,
        my(c = bnrconductor(bnr, H));
        if (c[1] == m && c[2] == inf,
          listput(res, polredabs(bnrclassfield(bnr, H, 2)))))));
  Vec(res)''')


def polkey(p):
    return [int(c) for c in gp.Vecrev(p)]


def nflist(group, lo, hi, r2):
    try:
        return list(gp(f'nflist({group}, [{lo}, {hi}], {r2})'))
    except cypari2.PariError as err:
        # some groups (e.g. A5 quintics) need the optional nflistdata package
        sys.stderr.write(f'skipping nflist({group}): {err}\n')
        return []


fields = {}


def add(pol):
    p = gp.polredabs(pol)
    key = tuple(polkey(p))
    if key not in fields:
        fields[key] = p
    return key


# ---- field selection -------------------------------------------------------
Q_KEY = add(gp("x - 1"))
for f in nflist('"C2"', 1, 100, 0):
    add(f)
for f in nflist('"C2"', 1, 200, 1):
    add(f)
for grp in ('"C3"', '"S3"'):
    for f in nflist(grp, 1, 600, 0):
        add(f)
for i in range(1, 6):
    for f in nflist(f'[4,{i}]', 1, 2000, 0):
        add(f)
    for f in nflist(f'[4,{i}]', 1, 2500, 2):
        add(f)
for i in range(1, 5):
    for f in nflist(f'[5,{i}]', 1, 15000, 0):
        add(f)
for i in range(1, 14):
    for f in nflist(f'[6,{i}]', 1, 60000, 3):
        add(f)
# smallest totally real sextic: Q(sqrt5) composed with the cubic of conductor 7
add(gp('polcompositum(x^2 - 5, polsubcyclo(7, 3))[1]'))
# totally complex quadratic extensions of the two smallest totally real quartics
for D, bound in ((725, 3), (1125, 1)):
    for k in gp(f'concat([nflist([4,i], [{D},{D}], 0) | i <- [1..5]])'):
        for ell in gp(f'quadexts({k}, {bound})'):
            add(ell)
# smallest totally complex octic, a quadratic extension of the quartic x^4+2x^2+17
for ell in gp('quadexts(x^4 + 2*x^2 + 17, 17)'):
    add(ell)
# quadratic CM extension Q(sqrt(-7+4sqrt2)) of Q(sqrt2)
ELL_C10 = add(gp('x^4 + 14*x^2 + 17'))

# subfield closure
changed = True
while changed:
    changed = False
    for key, p in list(fields.items()):
        n = int(gp.poldegree(p))
        for d in range(2, n):
            if n % d:
                continue
            for sub in gp.nfsubfields(p, d):
                q = gp.polredabs(sub[0])
                if tuple(polkey(q)) not in fields:
                    fields[tuple(polkey(q))] = q
                    changed = True


# ---- per-field data --------------------------------------------------------
def phi(m):
    return int(gp.eulerphi(m))


def characters(p, nf, degree, disc):
    """Dirichlet characters of an abelian field, as primitive characters."""
    if degree == 1:
        return 1, [{"modulus": 1, "generator_values": []}]
    f = int(gp(f'rnfconductor(bnfinit(y - 1), {p})[1][1][1, 1]'))
    G = gp.znstar(f, 1)
    H = set()
    for a in range(1, f + 1):
        if gcd(a, f) != 1:
            continue
        q = a
        while not (int(gp.isprime(q)) and disc % q != 0):
            q += f
        if len(gp.idealprimedec(nf, q)) == degree:
            H.add(a % f)
    assert len(H) * degree == phi(f), (p, f, len(H))
    cyc = [int(c) for c in G[1][1]]
    out = []

    def rec(i, acc):
        if i == len(cyc):
            yield list(acc)
            return
        for e in range(cyc[i]):
            yield from rec(i + 1, acc + [e])

    for vec in rec(0, []):
        chi = gp(str(vec))
        if all(gp.chareval(G, chi, h) == 0 for h in H):
            prim = gp.znchartoprimitive(G, chi)
            G0, chi0 = prim[0], prim[1]
            f0 = int(gp('(G) -> G.mod')(G0))
            gens = [int(gp.lift(g)) for g in gp('(G) -> G.gen')(G0)]
            vals = []
            for g in gens:
                v = gp.chareval(G0, chi0, g)
                vals.append([g, int(gp.numerator(v)), int(gp.denominator(v))])
            out.append({"modulus": f0, "generator_values": vals})
    assert len(out) == degree
    out.sort(key=lambda c: (c["modulus"], json.dumps(c["generator_values"])))
    return f, out


records = []
for key, p in fields.items():
    nf = gp.nfinit(p)
    n = int(gp.poldegree(p))
    r1, r2 = [int(s) for s in nf[1]]
    disc = int(gp.nfdisc(p))
    bnf = gp.bnfinit(p, 1)
    assert int(gp.bnfcertify(bnf)) == 1
    cyc = [int(c) for c in gp('(b) -> b.cyc')(bnf)]
    if n == 1:
        abelian = True
    else:
        gal = gp(f'iferr(galoisinit({p}), E, 0)')
        abelian = gal != 0 and int(gp.galoisisabelian(gal, 1)) != 0
    rec = {
        "degree": n, "r1": r1, "r2": r2, "disc": disc, "class_group": cyc,
        "poly": polkey(p), "abelian": abelian,
        "conductor": None, "characters": None, "subfields": [],
    }
    if abelian:
        f, chars = characters(p, nf, n, abs(disc))
        rec["conductor"] = f
        rec["characters"] = chars
    rec["_key"] = key
    records.append(rec)

records.sort(key=lambda r: (r["degree"], r["r1"], abs(r["disc"]), r["poly"]))
counters = {}
by_key = {}
for r in records:
    base = f'{r["degree"]}.{r["r1"]}.{abs(r["disc"])}'
    counters[base] = counters.get(base, 0) + 1
    r["label"] = f'{base}.{counters[base]}'
    by_key[r["_key"]] = r

for r in records:
    p = fields[r["_key"]]
    n = r["degree"]
    subs = []
    for d in range(1, n):
        if n % d:
            continue
        if d == 1:
            subs.append(by_key[Q_KEY]["label"])
            continue
        for sub in gp.nfsubfields(p, d):
            q = gp.polredabs(sub[0])
            lab = by_key[tuple(polkey(q))]["label"]
            if lab not in subs:
                subs.append(lab)
    r["subfields"] = subs


# ---- friendly aliases ------------------------------------------------------
def radicand(d):
    return d if d % 4 == 1 else d // 4


unique = {}
for r in records:
    unique.setdefault((r["degree"], abs(r["disc"])), []).append(r)

for r in records:
    al = []
    n, D = r["degree"], r["disc"]
    if n == 1:
        al.append("Q")
    if n == 2:
        al.append(f"Q-sqrt{radicand(D)}")
    if r["abelian"] and n > 1:
        m = r["conductor"]
        if n == phi(m) and m % 4 != 2:
            al.append(f"Q-zeta{m}")
        if r["r2"] == 0 and 2 * n == phi(m) and m > 2 and m % 4 != 2:
            al.append(f"Q-zeta{m}+")
    if n == 4 and r["abelian"]:
        quads = [by_label for by_label in records
                 if by_label["degree"] == 2 and by_label["label"] in r["subfields"]]
        if len(quads) == 3:
            rads = sorted(radicand(q["disc"]) for q in quads)
            for i in range(3):
                for j in range(i + 1, 3):
                    al.append(f"Q-sqrt{rads[i]}-sqrt{rads[j]}")
    names = {3: "cubic", 4: "quartic", 6: "sextic", 8: "octic"}
    if n in names and len(unique[(n, abs(D))]) == 1:
        al.append(f"{names[n]}-{abs(D)}")
    if r["_key"] == ELL_C10:
        al.append("Q-sqrt(-7+4sqrt2)")
    r["aliases"] = al

# Hecke character of Q(sqrt(-7+4sqrt2)) over Q(sqrt2): for x >> 0 in Z[sqrt2],
# psi((x)) is the Legendre symbol of x mod (17, sqrt2 - 6).
k2 = [r for r in records if r["degree"] == 2 and r["disc"] == 8][0]
ell = by_key[ELL_C10]
check = gp('bnrclassfield(bnrinit(bnfinit(y^2-2,1), [idealprimedec(nfinit(y^2-2), 17)[1], [1,1]]), 2, 2)')
assert gp.nfisisom(gp.polredabs(check), fields[ELL_C10]) != 0
ell["hecke"] = {"base": k2["label"], "prime": 17, "root": 6}
assert (-7 + 4 * 6) % 17 == 0

for r in records:
    del r["_key"]
    out = {k: r[k] for k in ("label", "degree", "r1", "r2", "disc", "class_group", "poly",
                             "abelian", "conductor", "characters", "subfields", "aliases")}
    if "hecke" in r:
        out["hecke"] = r["hecke"]
    sys.stdout.write(json.dumps(out, separators=(",", ":")) + "\n")
