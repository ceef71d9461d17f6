import setuptools

with open('README.md', 'r') as fh:
    long_description = fh.read()

setuptools.setup(
    name='lanq',
    version='0.1.0',
    description='Type checker and simulator for the LanQ quantum programming language',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='BSD 3',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Operating System :: Unix',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Physics',
        'Topic :: Software Development :: Interpreters',
    ],
    packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
    package_data={
        'lanq.examples': ['corpus/*.lq'],
    },
    install_requires=[
        'numpy<1.24',
    ],
    extras_require={
        "test": [
            'pytest',
            'hypothesis',
        ],
    },
    python_requires='>=3.8, <3.11',
    entry_points={
        'console_scripts': [
            'lanq=lanq.scripts.scripts:cli'
        ]
    },
)
