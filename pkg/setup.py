try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

long_desc = '''Rewrites directed multigraphs and simple graphs with rules whose legs need not be injective.

nlrewrite implements sesqui-pushout and double-pushout rewriting for rules that clone and merge vertices, the
multi-sums, multi-pushout-complements and final pullback complements these need, and the composition of rules
along rule matches, with a check that derivations along composites agree with two-step derivations.


    import nlrewrite

    I = nlrewrite.multigraph(['x'])
    K = nlrewrite.multigraph(['k1', 'k2'])
    clone = nlrewrite.Rule('clone', nlrewrite.identity(K), nlrewrite.Morphism(K, I, {'k1': 'x', 'k2': 'x'}, {}))

    X = nlrewrite.multigraph(['v'], [('l', 'v', 'v')])
    nlrewrite.derive_all(X, clone)[0].result

    # two looped vertices joined both ways

The same is available from the command line: nlrewrite apply clone.txt host.txt
'''

# rm -rf dist build && python3 setup.py sdist
# twine upload dist/*
setup(
    name='nlrewrite',
    version='0.1.0',
    packages=['nlrewrite', 'nlrewrite.concurrent', 'nlrewrite.cli'],
    install_requires=['six>=1.10'],
    extras_require={'test': ['pytest', 'hypothesis']},
    entry_points={'console_scripts': ['nlrewrite=nlrewrite.cli.main:main']},
    license='MIT',
    author='The nlrewrite developers',
    description='Sesqui-pushout and double-pushout graph rewriting with non-linear rules and rule composition.',
    long_description=long_desc
)
