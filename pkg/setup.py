import setuptools

setuptools.setup(
    name="peocalc",
    version="0.1",
    description="Laguerre and fractional operational calculus: eigen-operators, umbral images and Weyl algebra.",
    long_description=open('README.rst').read(),
    long_description_content_type="text/x-rst",
    license='LICENSE.txt',
    packages=['peocalc'],
    packages_dir={'peocalc': './peocalc'},
    install_requires=['numpy', 'scipy'],
    extras_require={'plot': ['matplotlib'],
                    'test': ['pytest', 'sympy']},
    entry_points={'console_scripts': ['peocalc = peocalc.cli:main']},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
)
