"""Author: grouptree developers, Copyright 2026, MIT License"""


from setuptools import find_packages
from setuptools import setup


REQUIRED_PACKAGES = [
    'tensorflow>=2.1.0',
    'numpy',
    'pandas>=1.5',
    'graphviz',
    'tensorboard']


TEST_PACKAGES = [
    'pytest',
    'hypothesis']


setup(
    name='grouptree',
    version='0.1',
    install_requires=REQUIRED_PACKAGES,
    extras_require=dict(test=TEST_PACKAGES),
    include_package_data=True,
    packages=[p for p in find_packages() if p.startswith('grouptree')],
    entry_points=dict(console_scripts=['grouptree=grouptree.cli:main']),
    description='ID3 and grouped equal width decision trees for numeric data.')
