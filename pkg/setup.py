from setuptools import setup, find_packages

setup(
    name='simpletreepacking',
    version='0.1.0',
    install_requires=['networkx'],
    extras_require={'test': ['pytest']},
    description='Simple Python 3 edge-disjoint spanning tree packing, with certificates when no packing exists',
    keywords='graph spanning-tree packing multigraph',
    license='MIT',
    packages=find_packages(),
    entry_points={
        'console_scripts': ['treepack=simpletreepacking.cli:main'],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'License :: OSI Approved :: MIT License',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3',
    ],
)
