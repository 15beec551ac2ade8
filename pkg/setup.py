from setuptools import setup, find_packages


install_requires = [
    'numpy>=1.20',
    'scipy>=1.6',
]

setup(
    name='cavitybell',
    version=__import__('cavitybell').__version__,
    packages=find_packages(exclude=('examples', 'tests',)),
    author='cavitybell developers',
    description='Entanglement and Bell non-locality of two atoms crossing a cavity mode, with quantized atomic motion',
    long_description=open('README.rst').read(),
    zip_safe=False,
    license='MIT',
    keywords='quantum optics cavity qed entanglement stern-gerlach',
    python_requires=">=3.8",
    install_requires=install_requires,
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'License :: OSI Approved :: MIT License',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    extras_require={
        'signals': ['blinker>=1.3,<2.0'],
        'plot': ['matplotlib>=3.3'],
    },
    entry_points={
        'console_scripts': ['cavitybell = cavitybell.cli:main'],
    },
    package_data={'cavitybell': ['py.typed']},
)
