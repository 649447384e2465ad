from omk.cli import main_exit

main_exit()
