class SharedCommandController implements ActionListener {
  static final String ACTION_CMD = "actionCmd";
  JButton button;
  JMenuItem menu;

  SharedCommandController() {
    button = new JButton();
    menu = new JMenuItem();
    button.setActionCommand(ACTION_CMD);
    menu.setActionCommand(ACTION_CMD);
    button.addActionListener(this);
    menu.addActionListener(this);
  }

  public void actionPerformed(ActionEvent e) {
    if (ACTION_CMD.equals(e.getActionCommand())) {
      runSharedCommand();
    }
  }
}
