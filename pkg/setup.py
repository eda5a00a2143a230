from setuptools import setup, find_packages

version = '1.0.0'

setup(
    name='pgaext-mul',
    version=version,
    description="Single-pass instruction sequences for long multiplication",
    long_description="""\
    Generators, an executor and checkers for PGA instruction sequences
    that multiply natural numbers bit by bit.
    """,
    classifiers=[],
    keywords='pga instruction-sequence multiplication',
    license='AGPL',
    packages=find_packages(exclude=['ez_setup', 'examples', 'tests']),
    namespace_packages=['pgaext'],
    include_package_data=True,
    zip_safe=False,
    python_requires='>=3.7',
    install_requires=[
        'pyyaml',
        'requests',
    ],
    entry_points=\
    """
    [console_scripts]
    pgaext-mul=pgaext.mul.commands.mul:main
    """,
)
