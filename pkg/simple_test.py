import nlrewrite

print("Testing sesqui-pushout rewriting...")

I = nlrewrite.multigraph(['x'])
K = nlrewrite.multigraph(['k1', 'k2'])
clone = nlrewrite.Rule('clone', nlrewrite.identity(K), nlrewrite.Morphism(K, I, {'k1': 'x', 'k2': 'x'}, {}))
X = nlrewrite.multigraph(['v'], [('l', 'v', 'v')])

d = nlrewrite.derive_all(X, clone)[0]
assert (len(d.result.vertices), len(d.result.edges)) == (2, 4)

star = nlrewrite.multigraph(['c', 'a', 'b'], [('e1', 'c', 'a'), ('e2', 'c', 'b')])
delete = nlrewrite.Rule('delete', nlrewrite.identity(nlrewrite.multigraph([])),
                        nlrewrite.Morphism(nlrewrite.multigraph([]), I, {}, {}))
results = [r.result for r in nlrewrite.derive_all(star, delete) if r.m.vmap['x'] == 'c']
assert [(len(Y.vertices), len(Y.edges)) for Y in results] == [(2, 0)]

print("Passed SqPO!\n" + 30 * '-')

print("Testing double-pushout rewriting...")

assert len(nlrewrite.derive_all(X, clone, nlrewrite.DPO)) == 4
assert nlrewrite.matches(delete, star, nlrewrite.DPO) == []
print("Passed DPO!\n" + 30 * '-')

print("Testing rule composition...")

merge = nlrewrite.Rule('merge', nlrewrite.Morphism(K, I, {'k1': 'x', 'k2': 'x'}, {}), nlrewrite.identity(K))
for first, second in ((clone, merge), (merge, clone), (clone, clone)):
    report = nlrewrite.compatibility_check(second, first, nlrewrite.multigraph(['a', 'b']))
    print(report.summary())
    assert report.ok

try:
    nlrewrite.derive(X, clone, nlrewrite.derive_all(nlrewrite.multigraph(['w']), clone)[0].match)
    assert 0
except nlrewrite.RewriteError as err:
    assert err.exit_code == 1

print("Passed composition!")
