import glob
import os

from setuptools import find_packages, setup

# read the contents of your README file
this_directory = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(this_directory, 'README.md'), encoding='utf-8') as f:
    LONG = f.read()

conf = []

for name in glob.glob('config/plugins.d/*.conf'):
    conf.insert(1, name)

setup(name='tapsp',
      version='1.0.0',
      description='All-pairs shortest paths by min-plus squaring with a '
                  'sorted early-termination kernel',
      long_description=LONG,
      long_description_content_type='text/markdown',
      classifiers=[
          "Programming Language :: Python :: 3",
          "License :: OSI Approved :: MIT License",
          "Operating System :: OS Independent",
          "Development Status :: 4 - Beta",
          "Environment :: Console",
          "Natural Language :: English",
          "Topic :: Scientific/Engineering :: Mathematics",
      ],
      keywords='shortest paths min-plus tropical benchmark CLI',
      license='MIT',
      packages=find_packages(exclude=['ez_setup', 'examples', 'tests']),
      package_data={'tapsp.cli.templates': ['*.mustache']},
      include_package_data=True,
      zip_safe=False,
      python_requires='>=3.8',
      install_requires=[
          # Required to function
          'cement == 2.10.14',
          'pystache',
          'psutil',
          'argcomplete',
          'colorlog',
          'numpy >= 1.22',
          'scipy',
          'numba >= 0.56',
      ],
      extras_require={  # Optional
          'testing': ['pytest', 'coverage'],
      },
      data_files=[('/etc/tapsp', ['config/tapsp.conf']),
                  ('/etc/tapsp/plugins.d', conf)],
      setup_requires=[],
      entry_points="""
          [console_scripts]
          tapsp = tapsp.cli.main:main
      """,
      namespace_packages=[],
      )
