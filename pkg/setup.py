import os
import re
from pathlib import Path
from setuptools import setup

# The directory containing this file
HERE = Path(__file__).parent

version = ''
with open(f'{HERE}/piecewise_rsk/__init__.py', encoding='utf-8') as f:
    version += re.search(r'^__version__\s*=\s*[\'"]([^\'"]*)[\'"]', f.read(), re.MULTILINE).group(1)

v = None
if os.path.isfile(HERE / 'version.txt'):
    with open(HERE / 'version.txt', 'r') as fp:
        v = fp.read().strip()

if not (version or v):
    raise RuntimeError('version is not set')

if version.endswith(('a', 'b', 'rc')):
    # append version identifier based on commit count
    try:
        import subprocess
        p = subprocess.Popen(['git', 'rev-list', '--count', 'HEAD'],
                             stdout=subprocess.PIPE, stderr=subprocess.PIPE)
        out, err = p.communicate()
        if out:
            version += out.decode('utf-8').strip()
        p = subprocess.Popen(['git', 'rev-parse', '--short', 'HEAD'],
                             stdout=subprocess.PIPE, stderr=subprocess.PIPE)
        out, err = p.communicate()
        if out:
            version += '+g' + out.decode('utf-8').strip()
    except Exception as exc:
        pass


# The text of the README file
readme = (HERE / 'README.rst').read_text(encoding='utf-8')

requirements = (HERE / 'requirements.txt').read_text(encoding='utf-8').splitlines()

extras_require = {
    'test': [
        'pytest>=7',
        'hypothesis>=6',
    ],
    'docs': [
        'sphinx',
        'sphinx_rtd_theme',
    ]
}

# This call to setup() does all the work
setup(
    name="piecewise-rsk",
    version=str(v if v else version),
    author="piecewise-rsk developers",
    description="RSK on N-tableaux by piecewise-linear toggles, with classical, octahedron and path oracles",
    keywords='rsk tableaux toggles octahedron-recurrence hook-length plane-partitions',
    long_description=readme,
    long_description_content_type="text/x-rst",
    extras_require=extras_require,
    license="MIT",
    classifiers=[
        'Development Status :: 4 - Beta',
        'License :: OSI Approved :: MIT License',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=['piecewise_rsk'],
    include_package_data=True,
    install_requires=[r for r in requirements if r and not r.startswith('#')],
    entry_points={'console_scripts': ['piecewise-rsk = piecewise_rsk.__main__:main']},
    python_requires=">=3.8"
)
