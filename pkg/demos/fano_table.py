"""Which blowups of G(k,n) along smooth Schubert centers are Fano?"""

from grassblow.classify import all_specs, classify

for n in range(4, 8):
    print(f"n = {n}")
    for spec in all_specs(n, n):
        r = classify(spec)
        if r.codim < 2:
            continue
        mark = "Fano" if r.isFano else "    "
        types = ",".join(sorted(r.bundleType)) or "-"
        print(f"  G({spec.k},{n}) along G({r.centerK},{r.centerN}): codim {r.codim:2d} {mark} "
              f"index {r.fanoIndex or '-'}  bundles {types}  fibration {r.fibrationNumber}")
