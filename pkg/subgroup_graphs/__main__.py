from subgroup_graphs.cli import main

main()
