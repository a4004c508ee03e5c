from setuptools import setup


setup(
    name='stoimenow-matchings',
    version='1.0.0',
    packages=['stoimenow'],
    description='Direct bijection between Stoimenow matchings and ascent sequences, with enumeration, sampling and arc diagrams',
    license='MIT',
    include_package_data=False,
    python_requires='>=3.8',
    install_requires=['numpy', "pillow>=10.3.0"],
    extras_require={'test': ['pytest', 'hypothesis', 'scipy']},
    entry_points={'console_scripts': ['stoimenow = stoimenow.cli:main']},
)
